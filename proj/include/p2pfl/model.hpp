#ifndef P2PFL_MODEL_HPP_
#define P2PFL_MODEL_HPP_

#include <cstdint>
#include <string>

#include "p2pfl/dataset.hpp"
#include "p2pfl/param_vector.hpp"

namespace p2pfl {

// One-hidden-layer MLP with tanh units and a softmax cross-entropy head.
struct ModelSpec {
    int input_dim = 784;
    int hidden_dim = 64;
    int num_classes = 10;
    std::string activation = "tanh";  // only supported activation
};

int param_count(const ModelSpec& spec);
void validate(const ModelSpec& spec);

struct TrainConfig {
    double learning_rate = 0.05;
    int batch_size = 32;
    int local_epochs = 1;
    uint64_t seed = 0;
};

// Seeded Glorot-uniform weights, zero biases. Identical seed, identical
// vector — every protocol participant starts from the same model.
ParamVector init_model(const ModelSpec& spec, uint64_t seed);

// Runs cfg.local_epochs of seeded mini-batch SGD with cross-entropy loss and
// returns the parameter delta (trained - f). f itself is not mutated.
ParamVector local_update(const ModelSpec& spec, const ParamVector& f, const Dataset& train,
                         const TrainConfig& cfg);

struct EvalResult {
    double accuracy = 0.0;    // fraction of argmax predictions equal to the label
    double target_rate = 0.0; // fraction of samples predicted as target_class
};
EvalResult evaluate(const ModelSpec& spec, const ParamVector& f, const Dataset& d, int target_class);

// Mean cross-entropy loss over the dataset.
double mean_loss(const ModelSpec& spec, const ParamVector& f, const Dataset& d);

// Full-batch analytic gradient of the mean loss. Exposed so an independent
// finite-difference oracle can check the backward pass.
ParamVector loss_gradient(const ModelSpec& spec, const ParamVector& f, const Dataset& d);

}  // namespace p2pfl

#endif  // P2PFL_MODEL_HPP_
