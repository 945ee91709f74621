#include "p2pfl/backdoor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "p2pfl/rng.hpp"

namespace p2pfl {

std::string to_string(TriggerSpec::Position p) {
    switch (p) {
        case TriggerSpec::Position::top_left: return "top_left";
        case TriggerSpec::Position::top_right: return "top_right";
        case TriggerSpec::Position::bottom_left: return "bottom_left";
        case TriggerSpec::Position::bottom_right: return "bottom_right";
    }
    throw std::logic_error("unknown trigger position");
}

TriggerSpec::Position trigger_position_from_string(const std::string& s) {
    if (s == "top_left") return TriggerSpec::Position::top_left;
    if (s == "top_right") return TriggerSpec::Position::top_right;
    if (s == "bottom_left") return TriggerSpec::Position::bottom_left;
    if (s == "bottom_right") return TriggerSpec::Position::bottom_right;
    throw std::invalid_argument("unknown trigger position: " + s);
}

namespace {

void trigger_origin(const Dataset& d, const TriggerSpec& t, int& row0, int& col0) {
    if (t.size <= 0 || t.size > d.rows || t.size > d.cols)
        throw std::invalid_argument("trigger size does not fit the image");
    const bool top = t.position == TriggerSpec::Position::top_left ||
                     t.position == TriggerSpec::Position::top_right;
    const bool left = t.position == TriggerSpec::Position::top_left ||
                      t.position == TriggerSpec::Position::bottom_left;
    row0 = top ? 0 : d.rows - t.size;
    col0 = left ? 0 : d.cols - t.size;
}

}  // namespace

void stamp_trigger(Dataset& d, int index, const TriggerSpec& trigger) {
    int row0, col0;
    trigger_origin(d, trigger, row0, col0);
    float* img = d.image(index);
    for (int r = row0; r < row0 + trigger.size; ++r)
        for (int c = col0; c < col0 + trigger.size; ++c)
            img[r * d.cols + c] = static_cast<float>(trigger.value);
}

bool has_trigger(const Dataset& d, int index, const TriggerSpec& trigger) {
    int row0, col0;
    trigger_origin(d, trigger, row0, col0);
    const float* img = d.image(index);
    for (int r = row0; r < row0 + trigger.size; ++r)
        for (int c = col0; c < col0 + trigger.size; ++c)
            if (img[r * d.cols + c] != static_cast<float>(trigger.value)) return false;
    return true;
}

Shard poison_shard(const Shard& s, const BackdoorSpec& spec, uint64_t seed) {
    if (spec.pdr < 0.0 || spec.pdr > 1.0) throw std::invalid_argument("poison_shard: pdr must be in [0,1]");
    if (spec.target_class < 0 || spec.target_class >= s.train.num_classes)
        throw std::invalid_argument("poison_shard: target class out of range");
    Shard out = s;
    const int count = static_cast<int>(std::lround(spec.pdr * s.train.size()));
    if (count == 0) return out;
    Rng rng(derive_seed(seed, 0xbdULL));
    std::vector<int> chosen = rng.sample_without_replacement(s.train.size(), count);
    for (int idx : chosen) {
        stamp_trigger(out.train, idx, spec.trigger);
        out.train.labels[idx] = spec.target_class;
    }
    return out;
}

EvalSplit make_eval_split(const Dataset& test, const BackdoorSpec& spec) {
    if (test.size() < 2) throw std::invalid_argument("make_eval_split: empty halves (need at least 2 samples)");
    const int half = test.size() / 2;
    EvalSplit split;
    split.clean = slice(test, 0, half);

    const Dataset source = slice(test, half, test.size());
    Dataset back;
    back.name = test.name + "/backdoored";
    back.rows = test.rows;
    back.cols = test.cols;
    back.num_classes = test.num_classes;
    const int dim = test.input_dim();
    for (int i = 0; i < source.size(); ++i) {
        if (source.labels[i] == spec.target_class) continue;
        back.pixels.insert(back.pixels.end(), source.image(i), source.image(i) + dim);
        back.labels.push_back(source.labels[i]);
    }
    for (int i = 0; i < back.size(); ++i) stamp_trigger(back, i, spec.trigger);
    if (back.size() == 0) throw std::runtime_error("make_eval_split: empty backdoor split");
    split.backdoored = std::move(back);
    return split;
}

}  // namespace p2pfl
