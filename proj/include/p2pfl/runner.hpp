#ifndef P2PFL_RUNNER_HPP_
#define P2PFL_RUNNER_HPP_

#include <string>
#include <vector>

#include "p2pfl/experiment.hpp"

namespace p2pfl {

// Artifacts written by a full run: one raw CSV per seed, the cross-seed
// aggregate CSV, the topology edge list, and a manifest with the resolved
// config and per-seed adversary sets.
struct RunPaths {
    std::string dir;
    std::vector<std::string> raw;
    std::string aggregate;
    std::string topology;
    std::string manifest;
};

// Runs every configured seed and writes all artifacts under cfg.output_dir.
// All numeric artifact bytes are a pure function of the config; only the
// manifest timestamp varies between invocations.
RunPaths run_to_dir(const ExperimentConfig& cfg, int threads);

}  // namespace p2pfl

#endif  // P2PFL_RUNNER_HPP_
