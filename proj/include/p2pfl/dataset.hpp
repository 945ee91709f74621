#ifndef P2PFL_DATASET_HPP_
#define P2PFL_DATASET_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace p2pfl {

// Image classification dataset: pixels in [0,1], one integer label per
// sample. Immutable once built; all transformations return new values.
struct Dataset {
    std::string name;
    int rows = 0;
    int cols = 0;
    int num_classes = 0;
    std::vector<float> pixels;  // size() * rows * cols, sample-major
    std::vector<int> labels;

    int size() const { return static_cast<int>(labels.size()); }
    int input_dim() const { return rows * cols; }
    const float* image(int i) const { return pixels.data() + static_cast<size_t>(i) * input_dim(); }
    float* image(int i) { return pixels.data() + static_cast<size_t>(i) * input_dim(); }
};

// IDX file pair (big-endian magics 0x00000803 images / 0x00000801 labels).
Dataset load_idx_pair(const std::string& images_path, const std::string& labels_path,
                      const std::string& name);
void save_idx_pair(const Dataset& d, const std::string& images_path, const std::string& labels_path);

// Resolves the conventional file names for a named dataset under `dir` and
// loads the train or test pair. Supported names: "emnist" (digits split,
// emnist-digits-* files) and "fashion_mnist" (train-* / t10k-* files).
Dataset load_named(const std::string& name, const std::string& dir, bool train);

// Deterministic 10-class separable image set: one seeded random prototype per
// class, each sample perturbs prototype pixels with probability `noise`.
// Pixels stay on the 1/255 grid so IDX round-trips are bit-exact.
struct SyntheticSpec {
    uint64_t seed = 0;
    int samples = 0;
    int num_classes = 10;
    int rows = 28;
    int cols = 28;
    double noise = 0.3;
};
Dataset make_synthetic(const SyntheticSpec& spec);

// Samples [begin, end) of d, order preserved.
Dataset slice(const Dataset& d, int begin, int end);

// Seeded uniform permutation of the sample order.
Dataset shuffled(const Dataset& d, uint64_t seed);

// One peer's private training shard.
struct Shard {
    int owner = -1;
    Dataset train;
};

// Seeded shuffle split into n shards with sizes differing by at most one;
// lower node ids receive the extra sample.
std::vector<Shard> partition_iid(const Dataset& d, int n, uint64_t seed);

}  // namespace p2pfl

#endif  // P2PFL_DATASET_HPP_
