#ifndef P2PFL_BACKDOOR_HPP_
#define P2PFL_BACKDOOR_HPP_

#include <cstdint>
#include <string>

#include "p2pfl/dataset.hpp"

namespace p2pfl {

// Solid square trigger stamped onto a fixed corner of the image.
struct TriggerSpec {
    enum class Position { top_left, top_right, bottom_left, bottom_right };
    int size = 3;
    Position position = Position::bottom_right;
    double value = 1.0;
};

std::string to_string(TriggerSpec::Position p);
TriggerSpec::Position trigger_position_from_string(const std::string& s);

struct BackdoorSpec {
    double pdr = 0.5;  // poison data rate: fraction of a malicious shard poisoned
    int target_class = 2;
    TriggerSpec trigger;
};

// Overwrites the trigger region of sample i in place. Idempotent.
void stamp_trigger(Dataset& d, int index, const TriggerSpec& trigger);
bool has_trigger(const Dataset& d, int index, const TriggerSpec& trigger);

// Poisons exactly round(pdr * |shard|) samples chosen by seeded sampling
// without replacement: trigger stamped, label overwritten to target_class.
// Sample order is preserved; unselected samples are untouched.
Shard poison_shard(const Shard& s, const BackdoorSpec& spec, uint64_t seed);

// Evaluation split per the attack metrics: first half of the test set stays
// clean, second half drops original target-class samples and stamps the
// trigger on the rest (original labels retained).
struct EvalSplit {
    Dataset clean;
    Dataset backdoored;
};
EvalSplit make_eval_split(const Dataset& test, const BackdoorSpec& spec);

}  // namespace p2pfl

#endif  // P2PFL_BACKDOOR_HPP_
