#include "p2pfl/param_vector.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace p2pfl {

namespace {

void check_same_dim(const ParamVector& a, const ParamVector& b, const char* op) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace

ParamVector add(const ParamVector& a, const ParamVector& b) {
    check_same_dim(a, b, "add");
    ParamVector out(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) out.values[i] = a.values[i] + b.values[i];
    return out;
}

ParamVector scale(const ParamVector& v, double s) {
    ParamVector out(v.values.size());
    for (std::size_t i = 0; i < v.values.size(); ++i) out.values[i] = v.values[i] * s;
    return out;
}

void scale_in_place(ParamVector& v, double s) {
    for (auto& x : v.values) x *= s;
}

void add_in_place(ParamVector& dst, const ParamVector& src) {
    check_same_dim(dst, src, "add_in_place");
    for (std::size_t i = 0; i < dst.values.size(); ++i) dst.values[i] += src.values[i];
}

double l2_norm(const ParamVector& v) {
    double ss = 0.0;
    for (double x : v.values) ss += x * x;
    return std::sqrt(ss);
}

ParamVector mean(const std::vector<const ParamVector*>& vs) {
    if (vs.empty()) throw std::invalid_argument("mean: empty vector list");
    const int dim = vs.front()->dim();
    ParamVector out(dim, 0.0);
    for (const ParamVector* v : vs) {
        if (v->dim() != dim) throw std::invalid_argument("mean: dimension mismatch");
        for (int i = 0; i < dim; ++i) out.values[i] += v->values[i];
    }
    const double inv = 1.0 / static_cast<double>(vs.size());
    for (int i = 0; i < dim; ++i) out.values[i] *= inv;
    return out;
}

namespace {

static_assert(std::endian::native == std::endian::little,
              "blob format assumes a little-endian host");

}  // namespace

void save_blob(const ParamVector& v, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("save_blob: cannot open " + path);
    uint32_t dim = static_cast<uint32_t>(v.dim());
    f.write(reinterpret_cast<const char*>(&dim), sizeof(dim));
    std::vector<float> buf(v.values.begin(), v.values.end());
    f.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(float)));
    if (!f) throw std::runtime_error("save_blob: write failed for " + path);
}

ParamVector load_blob(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load_blob: cannot open " + path);
    uint32_t dim = 0;
    f.read(reinterpret_cast<char*>(&dim), sizeof(dim));
    if (!f) throw std::runtime_error("load_blob: truncated header in " + path);
    std::vector<float> buf(dim);
    f.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(float)));
    if (!f) throw std::runtime_error("load_blob: truncated payload in " + path);
    ParamVector v(dim);
    for (uint32_t i = 0; i < dim; ++i) v.values[i] = static_cast<double>(buf[i]);
    return v;
}

}  // namespace p2pfl
