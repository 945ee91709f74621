#include "p2pfl/model.hpp"

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "p2pfl/rng.hpp"

namespace p2pfl {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Parameter layout: [W1 (input x hidden, column-major) | b1 | W2 (hidden x
// classes, column-major) | b2].
struct LayerView {
    Eigen::Map<MatrixXd> w1;
    Eigen::Map<VectorXd> b1;
    Eigen::Map<MatrixXd> w2;
    Eigen::Map<VectorXd> b2;
};

LayerView view(const ModelSpec& s, double* p) {
    double* w1 = p;
    double* b1 = w1 + static_cast<size_t>(s.input_dim) * s.hidden_dim;
    double* w2 = b1 + s.hidden_dim;
    double* b2 = w2 + static_cast<size_t>(s.hidden_dim) * s.num_classes;
    return LayerView{Eigen::Map<MatrixXd>(w1, s.input_dim, s.hidden_dim),
                     Eigen::Map<VectorXd>(b1, s.hidden_dim),
                     Eigen::Map<MatrixXd>(w2, s.hidden_dim, s.num_classes),
                     Eigen::Map<VectorXd>(b2, s.num_classes)};
}

LayerView view(const ModelSpec& s, const ParamVector& f) {
    return view(s, const_cast<double*>(f.data()));
}

void check_model(const ModelSpec& s, const ParamVector& f) {
    validate(s);
    if (f.dim() != param_count(s))
        throw std::invalid_argument("model: parameter vector dim " + std::to_string(f.dim()) +
                                    " does not match spec (" + std::to_string(param_count(s)) + ")");
}

void check_data(const ModelSpec& s, const Dataset& d) {
    if (d.size() == 0) throw std::invalid_argument("model: empty dataset");
    if (d.input_dim() != s.input_dim)
        throw std::invalid_argument("model: dataset input dim " + std::to_string(d.input_dim()) +
                                    " does not match spec (" + std::to_string(s.input_dim) + ")");
    if (d.num_classes > s.num_classes)
        throw std::invalid_argument("model: dataset has more classes than the spec");
}

void fill_batch(const Dataset& d, const std::vector<int>& idx, int begin, int end, MatrixXd& x,
                std::vector<int>& y) {
    const int b = end - begin;
    x.resize(b, d.input_dim());
    y.resize(b);
    for (int i = 0; i < b; ++i) {
        const int sample = idx[begin + i];
        const float* img = d.image(sample);
        for (int j = 0; j < d.input_dim(); ++j) x(i, j) = static_cast<double>(img[j]);
        y[i] = d.labels[sample];
    }
}

// Forward pass; returns row-softmax probabilities and fills a1 (post-tanh).
MatrixXd forward(const LayerView& m, const MatrixXd& x, MatrixXd& a1) {
    a1 = ((x * m.w1).rowwise() + m.b1.transpose()).array().tanh().matrix();
    MatrixXd z2 = (a1 * m.w2).rowwise() + m.b2.transpose();
    MatrixXd p(z2.rows(), z2.cols());
    for (Eigen::Index i = 0; i < z2.rows(); ++i) {
        const double zmax = z2.row(i).maxCoeff();
        Eigen::ArrayXd e = (z2.row(i).array() - zmax).exp();
        p.row(i) = (e / e.sum()).matrix();
    }
    return p;
}

// Mean-loss gradient over one batch, accumulated into the gradient view.
// Returns the batch mean cross-entropy.
double batch_gradient(const LayerView& m, const MatrixXd& x, const std::vector<int>& y,
                      LayerView& g) {
    const int b = static_cast<int>(x.rows());
    MatrixXd a1;
    MatrixXd p = forward(m, x, a1);
    double loss = 0.0;
    for (int i = 0; i < b; ++i) loss -= std::log(std::max(p(i, y[i]), 1e-300));
    loss /= b;

    MatrixXd dz2 = p;
    for (int i = 0; i < b; ++i) dz2(i, y[i]) -= 1.0;
    dz2 /= static_cast<double>(b);

    g.w2 = a1.transpose() * dz2;
    g.b2 = dz2.colwise().sum();
    MatrixXd dz1 = (dz2 * m.w2.transpose()).array() * (1.0 - a1.array().square());
    g.w1 = x.transpose() * dz1;
    g.b1 = dz1.colwise().sum();
    return loss;
}

}  // namespace

int param_count(const ModelSpec& s) {
    return s.input_dim * s.hidden_dim + s.hidden_dim + s.hidden_dim * s.num_classes + s.num_classes;
}

void validate(const ModelSpec& s) {
    if (s.input_dim <= 0 || s.hidden_dim <= 0 || s.num_classes <= 0)
        throw std::invalid_argument("ModelSpec: dimensions must be positive");
    if (s.activation != "tanh")
        throw std::invalid_argument("ModelSpec: unsupported activation " + s.activation);
}

ParamVector init_model(const ModelSpec& spec, uint64_t seed) {
    validate(spec);
    ParamVector f(param_count(spec), 0.0);
    LayerView m = view(spec, f.data());
    Rng rng(derive_seed(seed, 0x1417ULL));
    const double a1 = std::sqrt(6.0 / (spec.input_dim + spec.hidden_dim));
    const double a2 = std::sqrt(6.0 / (spec.hidden_dim + spec.num_classes));
    for (Eigen::Index i = 0; i < m.w1.size(); ++i) m.w1.data()[i] = rng.uniform(-a1, a1);
    for (Eigen::Index i = 0; i < m.w2.size(); ++i) m.w2.data()[i] = rng.uniform(-a2, a2);
    // biases stay zero
    return f;
}

ParamVector local_update(const ModelSpec& spec, const ParamVector& f, const Dataset& train,
                         const TrainConfig& cfg) {
    check_model(spec, f);
    check_data(spec, train);
    if (cfg.batch_size < 1) throw std::invalid_argument("TrainConfig: batch size must be positive");
    if (cfg.local_epochs < 0) throw std::invalid_argument("TrainConfig: epochs must be non-negative");
    if (cfg.learning_rate < 0.0) throw std::invalid_argument("TrainConfig: learning rate must be non-negative");

    ParamVector params = f;
    LayerView m = view(spec, params.data());
    ParamVector grad(param_count(spec), 0.0);
    LayerView g = view(spec, grad.data());

    Rng rng(derive_seed(cfg.seed, 0x7a41ULL));
    std::vector<int> order(train.size());
    for (int i = 0; i < train.size(); ++i) order[i] = i;
    MatrixXd x;
    std::vector<int> y;
    for (int epoch = 0; epoch < cfg.local_epochs; ++epoch) {
        rng.shuffle(order);
        for (int begin = 0; begin < train.size(); begin += cfg.batch_size) {
            const int end = std::min(begin + cfg.batch_size, train.size());
            fill_batch(train, order, begin, end, x, y);
            batch_gradient(m, x, y, g);
            for (int i = 0; i < params.dim(); ++i) params.values[i] -= cfg.learning_rate * grad.values[i];
        }
    }
    for (int i = 0; i < params.dim(); ++i) params.values[i] -= f.values[i];
    return params;
}

EvalResult evaluate(const ModelSpec& spec, const ParamVector& f, const Dataset& d, int target_class) {
    check_model(spec, f);
    check_data(spec, d);
    LayerView m = view(spec, f);
    constexpr int kBatch = 512;
    int correct = 0, hits = 0;
    MatrixXd x, a1;
    std::vector<int> idx(d.size());
    for (int i = 0; i < d.size(); ++i) idx[i] = i;
    std::vector<int> y;
    for (int begin = 0; begin < d.size(); begin += kBatch) {
        const int end = std::min(begin + kBatch, d.size());
        fill_batch(d, idx, begin, end, x, y);
        MatrixXd p = forward(m, x, a1);
        for (Eigen::Index i = 0; i < p.rows(); ++i) {
            int argmax = 0;
            for (int c = 1; c < spec.num_classes; ++c)
                if (p(i, c) > p(i, argmax)) argmax = c;  // first max wins ties
            if (argmax == y[i]) ++correct;
            if (argmax == target_class) ++hits;
        }
    }
    EvalResult r;
    r.accuracy = static_cast<double>(correct) / d.size();
    r.target_rate = static_cast<double>(hits) / d.size();
    return r;
}

double mean_loss(const ModelSpec& spec, const ParamVector& f, const Dataset& d) {
    check_model(spec, f);
    check_data(spec, d);
    LayerView m = view(spec, f);
    constexpr int kBatch = 512;
    double total = 0.0;
    MatrixXd x, a1;
    std::vector<int> idx(d.size());
    for (int i = 0; i < d.size(); ++i) idx[i] = i;
    std::vector<int> y;
    for (int begin = 0; begin < d.size(); begin += kBatch) {
        const int end = std::min(begin + kBatch, d.size());
        fill_batch(d, idx, begin, end, x, y);
        MatrixXd p = forward(m, x, a1);
        for (Eigen::Index i = 0; i < p.rows(); ++i)
            total -= std::log(std::max(p(i, y[i]), 1e-300));
    }
    return total / d.size();
}

ParamVector loss_gradient(const ModelSpec& spec, const ParamVector& f, const Dataset& d) {
    check_model(spec, f);
    check_data(spec, d);
    LayerView m = view(spec, f);
    ParamVector grad(param_count(spec), 0.0);
    LayerView g = view(spec, grad.data());
    MatrixXd x;
    std::vector<int> idx(d.size());
    for (int i = 0; i < d.size(); ++i) idx[i] = i;
    std::vector<int> y;
    fill_batch(d, idx, 0, d.size(), x, y);
    batch_gradient(m, x, y, g);
    return grad;
}

}  // namespace p2pfl
