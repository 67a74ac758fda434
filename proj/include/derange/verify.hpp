#pragma once

#include <memory>
#include <string>
#include <vector>

#include "derange/projective_group.hpp"

namespace derange {

struct CheckResult {
    std::string check;
    int q;
    std::string claim;
    std::string expected;
    std::string observed;
    bool pass;
    double seconds;  // diagnostics only; reports stay byte-stable without it
};

struct VerifyOptions {
    int threads = 1;
    double eigen_tol = 1e-6;
    double orthogonality_tol = 1e-9;
    long long max_group_order = PglGroup::kDefaultMaxOrder;
    int ekr_q_limit = 7;    // largest q for the exhaustive searches
    std::string cache_dir;  // empty disables caching
    bool use_cache = true;
};

// Field + group with stable addresses; loads from the cache when enabled.
struct GroupBundle {
    std::unique_ptr<GaloisField> field;
    std::unique_ptr<PglGroup> group;
    std::string cache_note;
};
GroupBundle load_group(int q, const VerifyOptions& opt);

// One function per CLI check; each returns one row per verified claim.
std::vector<CheckResult> check_spectrum(int q, const VerifyOptions& opt);
std::vector<CheckResult> check_matrices(int q, const VerifyOptions& opt);
std::vector<CheckResult> check_ekr(int q, const VerifyOptions& opt);
std::vector<CheckResult> check_psl(int q, const VerifyOptions& opt);
std::vector<CheckResult> check_frobenius(int q, const VerifyOptions& opt);

// default q sweeps per check
std::vector<int> default_qs(const std::string& check);

}  // namespace derange
