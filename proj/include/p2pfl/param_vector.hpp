#ifndef P2PFL_PARAM_VECTOR_HPP_
#define P2PFL_PARAM_VECTOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace p2pfl {

// Flat model parameter (or parameter-delta) vector. The unit exchanged
// between peers; all aggregation and defense arithmetic operates on it.
struct ParamVector {
    std::vector<double> values;

    ParamVector() = default;
    explicit ParamVector(std::size_t dim, double fill = 0.0) : values(dim, fill) {}

    int dim() const { return static_cast<int>(values.size()); }
    double* data() { return values.data(); }
    const double* data() const { return values.data(); }

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
};

// Elementwise arithmetic. Summation order is fixed (ascending index) so
// results are run-to-run identical.
ParamVector add(const ParamVector& a, const ParamVector& b);
ParamVector scale(const ParamVector& v, double s);
void scale_in_place(ParamVector& v, double s);
void add_in_place(ParamVector& dst, const ParamVector& src);
double l2_norm(const ParamVector& v);
ParamVector mean(const std::vector<const ParamVector*>& vs);

// Checkpoint blob: u32 little-endian dim header followed by dim float32
// little-endian values. Doubles are narrowed on write.
void save_blob(const ParamVector& v, const std::string& path);
ParamVector load_blob(const std::string& path);

}  // namespace p2pfl

#endif  // P2PFL_PARAM_VECTOR_HPP_
