// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// Every tolerance is pinned here: exact equality unless a line says otherwise
// (numeric eigen-relations 1e-6, character orthogonality 1e-9).
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "derange/verify.hpp"

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> run;
};

bool all_pass(const std::vector<derange::CheckResult>& results, const std::string& prefix,
              std::string& detail) {
    bool ok = true;
    int counted = 0;
    for (const auto& r : results) {
        if (r.check.rfind(prefix, 0) != 0) continue;
        ++counted;
        if (!r.pass) {
            ok = false;
            detail += " [" + r.check + " q=" + std::to_string(r.q) + ": expected " + r.expected +
                      ", observed " + r.observed + "]";
        }
    }
    if (counted == 0) {
        ok = false;
        detail += " [no results for " + prefix + "]";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;

    derange::VerifyOptions opt;
    opt.threads = 2;
    opt.eigen_tol = 1e-6;
    opt.orthogonality_tol = 1e-9;

    std::vector<Criterion> criteria;

    criteria.push_back({1, "spectrum closed form, q in {2,3,4,5,7,8,9,11,13}, exact", [&](std::string& d) {
        bool ok = true;
        for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13})
            ok &= all_pass(derange::check_spectrum(q, opt), "spectrum.closed_form", d);
        return ok;
    }});

    criteria.push_back({2, "numeric adjacency spectrum cross-check, q in {2,3,4,5}, 1e-6", [&](std::string& d) {
        bool ok = true;
        for (int q : {2, 3, 4, 5})
            ok &= all_pass(derange::check_spectrum(q, opt), "spectrum.adjacency_crosscheck", d);
        return ok;
    }});

    criteria.push_back({3, "maximum intersecting sets are exactly the (q+1)^2 stabilizer cosets, "
                           "q in {2,3,4,5,7}, two certifications", [&](std::string& d) {
        bool ok = true;
        for (int q : {2, 3, 4, 5, 7}) {
            auto res = derange::check_ekr(q, opt);
            ok &= all_pass(res, "ekr.independence_number", d);
            ok &= all_pass(res, "ekr.maximum_set_count", d);
            ok &= all_pass(res, "ekr.all_stabilizer_cosets", d);
        }
        return ok;
    }});

    criteria.push_back({4, "derangement pair counts equal the cross-ratio formula, "
                           "q in {3,4,5,7,8,9}, exact", [&](std::string& d) {
        bool ok = true;
        for (int q : {3, 4, 5, 7, 8, 9})
            ok &= all_pass(derange::check_matrices(q, opt), "matrices.cross_ratio_formula", d);
        return ok;
    }});

    criteria.push_back({5, "rank suite: rank(A), kernel, rank(M)=rank(N), reduced ranks, gram "
                           "closed form, q in {3,4,5,7,8}, exact", [&](std::string& d) {
        bool ok = true;
        for (int q : {3, 4, 5, 7, 8}) {
            auto res = derange::check_matrices(q, opt);
            for (const char* prefix : {"matrices.gram_closed_form", "matrices.rank_A",
                                       "matrices.kernel", "matrices.rank_M", "matrices.reduced"})
                ok &= all_pass(res, prefix, d);
        }
        return ok;
    }});

    criteria.push_back({6, "eigenvector positivity with pinned even-q values, q in {4,5,7,8}, "
                           "1e-6 on the eigen-relation", [&](std::string& d) {
        bool ok = true;
        for (int q : {4, 5, 7, 8})
            ok &= all_pass(derange::check_matrices(q, opt), "matrices.eigenvector_positivity", d);
        return ok;
    }});

    criteria.push_back({7, "every maximum set satisfies the ratio-bound equality certificate, "
                           "q <= 7, exact rational", [&](std::string& d) {
        bool ok = true;
        for (int q : {2, 3, 4, 5, 7})
            ok &= all_pass(derange::check_ekr(q, opt), "ekr.hoffman_equality", d);
        return ok;
    }});

    criteria.push_back({8, "every maximum set is half inside the index-2 subgroup, odd q <= 7", [&](std::string& d) {
        bool ok = true;
        for (int q : {3, 5, 7})
            ok &= all_pass(derange::check_ekr(q, opt), "ekr.lambda_balance", d);
        return ok;
    }});

    criteria.push_back({9, "PSL(2,q) evidence: independence number q(q-1)/2 and all maximum "
                           "sets cosets, q in {5,7}", [&](std::string& d) {
        bool ok = true;
        for (int q : {5, 7}) {
            auto res = derange::check_psl(q, opt);
            ok &= all_pass(res, "psl.independence_number", d);
            ok &= all_pass(res, "psl.maximum_sets_are_cosets", d);
        }
        return ok;
    }});

    criteria.push_back({10, "affine Frobenius structure: q-1 disjoint q-cliques and q^(q-1) "
                            "maximum sets, q in {3,4,5,7,8}", [&](std::string& d) {
        bool ok = true;
        for (int q : {3, 4, 5, 7, 8}) {
            auto res = derange::check_frobenius(q, opt);
            ok &= all_pass(res, "frobenius.clique_structure", d);
            ok &= all_pass(res, "frobenius.maximum_set_count", d);
        }
        return ok;
    }});

    criteria.push_back({11, "character table health: orthogonality within 1e-9 and degree "
                            "squares summing to |G|, full sweep", [&](std::string& d) {
        bool ok = true;
        for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13})
            ok &= all_pass(derange::check_spectrum(q, opt), "spectrum.character_table_health", d);
        return ok;
    }});

    int failures = 0;
    for (auto& c : criteria) {
        if (only && c.number != only) continue;
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string(" [exception: ") + e.what() + "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title << " ("
             << secs << "s)" << detail;
        std::cout << line.str() << std::endl;
        if (!pass) ++failures;
    }
    if (failures) std::cout << failures << " criteria failed" << std::endl;
    return failures ? 1 : 0;
}
