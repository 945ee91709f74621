#include "p2pfl/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "p2pfl/rng.hpp"

namespace p2pfl {

namespace {

constexpr uint32_t kImagesMagic = 0x00000803;
constexpr uint32_t kLabelsMagic = 0x00000801;

uint32_t read_u32_be(std::istream& f, const std::string& path) {
    unsigned char b[4];
    f.read(reinterpret_cast<char*>(b), 4);
    if (!f) throw std::runtime_error("IDX: truncated header in " + path);
    return (uint32_t(b[0]) << 24) | (uint32_t(b[1]) << 16) | (uint32_t(b[2]) << 8) | uint32_t(b[3]);
}

void write_u32_be(std::ostream& f, uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v >> 24), static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 8), static_cast<unsigned char>(v)};
    f.write(reinterpret_cast<const char*>(b), 4);
}

int infer_num_classes(const std::vector<int>& labels) {
    int max_label = 0;
    for (int l : labels) max_label = std::max(max_label, l);
    return max_label + 1;
}

}  // namespace

Dataset load_idx_pair(const std::string& images_path, const std::string& labels_path,
                      const std::string& name) {
    std::ifstream fi(images_path, std::ios::binary);
    if (!fi) throw std::runtime_error("IDX: missing file " + images_path);
    std::ifstream fl(labels_path, std::ios::binary);
    if (!fl) throw std::runtime_error("IDX: missing file " + labels_path);

    const uint32_t im = read_u32_be(fi, images_path);
    if (im != kImagesMagic)
        throw std::runtime_error("IDX: malformed magic number in " + images_path);
    const uint32_t n_images = read_u32_be(fi, images_path);
    const uint32_t rows = read_u32_be(fi, images_path);
    const uint32_t cols = read_u32_be(fi, images_path);

    const uint32_t lm = read_u32_be(fl, labels_path);
    if (lm != kLabelsMagic)
        throw std::runtime_error("IDX: malformed magic number in " + labels_path);
    const uint32_t n_labels = read_u32_be(fl, labels_path);

    if (n_images != n_labels)
        throw std::runtime_error("IDX: count mismatch (" + std::to_string(n_images) + " images vs " +
                                 std::to_string(n_labels) + " labels)");

    Dataset d;
    d.name = name;
    d.rows = static_cast<int>(rows);
    d.cols = static_cast<int>(cols);

    const size_t n_pixels = static_cast<size_t>(n_images) * rows * cols;
    std::vector<unsigned char> raw(n_pixels);
    fi.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n_pixels));
    if (!fi) throw std::runtime_error("IDX: truncated image payload in " + images_path);
    d.pixels.resize(n_pixels);
    for (size_t i = 0; i < n_pixels; ++i) d.pixels[i] = static_cast<float>(raw[i]) / 255.0f;

    std::vector<unsigned char> raw_labels(n_labels);
    fl.read(reinterpret_cast<char*>(raw_labels.data()), static_cast<std::streamsize>(n_labels));
    if (!fl) throw std::runtime_error("IDX: truncated label payload in " + labels_path);
    d.labels.assign(raw_labels.begin(), raw_labels.end());
    d.num_classes = infer_num_classes(d.labels);
    return d;
}

void save_idx_pair(const Dataset& d, const std::string& images_path, const std::string& labels_path) {
    std::ofstream fi(images_path, std::ios::binary);
    if (!fi) throw std::runtime_error("IDX: cannot open " + images_path);
    write_u32_be(fi, kImagesMagic);
    write_u32_be(fi, static_cast<uint32_t>(d.size()));
    write_u32_be(fi, static_cast<uint32_t>(d.rows));
    write_u32_be(fi, static_cast<uint32_t>(d.cols));
    std::vector<unsigned char> raw(d.pixels.size());
    for (size_t i = 0; i < d.pixels.size(); ++i)
        raw[i] = static_cast<unsigned char>(std::lround(d.pixels[i] * 255.0f));
    fi.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!fi) throw std::runtime_error("IDX: write failed for " + images_path);

    std::ofstream fl(labels_path, std::ios::binary);
    if (!fl) throw std::runtime_error("IDX: cannot open " + labels_path);
    write_u32_be(fl, kLabelsMagic);
    write_u32_be(fl, static_cast<uint32_t>(d.size()));
    std::vector<unsigned char> raw_labels(d.labels.begin(), d.labels.end());
    fl.write(reinterpret_cast<const char*>(raw_labels.data()), static_cast<std::streamsize>(raw_labels.size()));
    if (!fl) throw std::runtime_error("IDX: write failed for " + labels_path);
}

Dataset load_named(const std::string& name, const std::string& dir, bool train) {
    namespace fs = std::filesystem;
    std::string images, labels;
    if (name == "emnist") {
        const std::string split = train ? "train" : "test";
        images = (fs::path(dir) / ("emnist-digits-" + split + "-images-idx3-ubyte")).string();
        labels = (fs::path(dir) / ("emnist-digits-" + split + "-labels-idx1-ubyte")).string();
    } else if (name == "fashion_mnist") {
        const std::string prefix = train ? "train" : "t10k";
        images = (fs::path(dir) / (prefix + "-images-idx3-ubyte")).string();
        labels = (fs::path(dir) / (prefix + "-labels-idx1-ubyte")).string();
    } else {
        throw std::invalid_argument("load_named: unknown dataset name " + name);
    }
    return load_idx_pair(images, labels, name);
}

Dataset make_synthetic(const SyntheticSpec& spec) {
    if (spec.samples <= 0) throw std::invalid_argument("make_synthetic: samples must be positive");
    if (spec.num_classes < 2) throw std::invalid_argument("make_synthetic: need at least two classes");
    if (spec.noise < 0.0 || spec.noise > 1.0) throw std::invalid_argument("make_synthetic: noise must be in [0,1]");
    Rng rng(derive_seed(spec.seed, 0x5d47aULL));
    const int dim = spec.rows * spec.cols;
    std::vector<unsigned char> prototypes(static_cast<size_t>(spec.num_classes) * dim);
    for (auto& p : prototypes) p = static_cast<unsigned char>(rng.below(256));

    Dataset d;
    d.name = "synthetic";
    d.rows = spec.rows;
    d.cols = spec.cols;
    d.num_classes = spec.num_classes;
    d.pixels.resize(static_cast<size_t>(spec.samples) * dim);
    d.labels.resize(spec.samples);
    for (int i = 0; i < spec.samples; ++i) {
        const int cls = i % spec.num_classes;
        d.labels[i] = cls;
        const unsigned char* proto = prototypes.data() + static_cast<size_t>(cls) * dim;
        float* out = d.image(i);
        for (int p = 0; p < dim; ++p) {
            unsigned char value = rng.next_double() < spec.noise
                                      ? static_cast<unsigned char>(rng.below(256))
                                      : proto[p];
            out[p] = static_cast<float>(value) / 255.0f;
        }
    }
    return d;
}

Dataset slice(const Dataset& d, int begin, int end) {
    if (begin < 0 || end > d.size() || begin > end)
        throw std::invalid_argument("slice: invalid range");
    Dataset out;
    out.name = d.name;
    out.rows = d.rows;
    out.cols = d.cols;
    out.num_classes = d.num_classes;
    const int dim = d.input_dim();
    out.pixels.assign(d.pixels.begin() + static_cast<size_t>(begin) * dim,
                      d.pixels.begin() + static_cast<size_t>(end) * dim);
    out.labels.assign(d.labels.begin() + begin, d.labels.begin() + end);
    return out;
}

Dataset shuffled(const Dataset& d, uint64_t seed) {
    Rng rng(derive_seed(seed, 0x5f1eULL));
    std::vector<int> perm(d.size());
    for (int i = 0; i < d.size(); ++i) perm[i] = i;
    rng.shuffle(perm);
    Dataset out;
    out.name = d.name;
    out.rows = d.rows;
    out.cols = d.cols;
    out.num_classes = d.num_classes;
    const int dim = d.input_dim();
    out.pixels.resize(d.pixels.size());
    out.labels.resize(d.labels.size());
    for (int i = 0; i < d.size(); ++i) {
        std::copy_n(d.image(perm[i]), dim, out.image(i));
        out.labels[i] = d.labels[perm[i]];
    }
    return out;
}

std::vector<Shard> partition_iid(const Dataset& d, int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("partition_iid: node count must be positive");
    if (d.size() < n)
        throw std::invalid_argument("partition_iid: dataset smaller than node count (" +
                                    std::to_string(d.size()) + " < " + std::to_string(n) + ")");
    Dataset mixed = shuffled(d, derive_seed(seed, 0x9a47ULL));
    const int base = d.size() / n;
    const int rem = d.size() % n;
    std::vector<Shard> shards;
    shards.reserve(n);
    int offset = 0;
    for (int i = 0; i < n; ++i) {
        const int sz = base + (i < rem ? 1 : 0);
        shards.push_back(Shard{i, slice(mixed, offset, offset + sz)});
        offset += sz;
    }
    return shards;
}

}  // namespace p2pfl
