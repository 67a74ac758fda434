#pragma once

#include <complex>
#include <string>
#include <vector>

#include "derange/projective_group.hpp"
#include "derange/rational.hpp"

namespace derange {

struct ConjClass {
    ClassLabel label;
    long long size;
    int rep_id;  // smallest element id in the class
    std::string name;
};

enum class CharKind { Lambda1, LambdaMinus1, Psi1, PsiMinus1, Eta, Nu };

struct CharacterLabel {
    CharKind kind;
    int j;  // 1-based index for Eta/Nu families, 0 otherwise
    std::string name;
};

// All table values have the shape  integer + cos_coeff * 2cos(2*pi*m/order).
struct SymbolicValue {
    long long integer = 0;
    int cos_coeff = 0;
    int m = 0;
    int order = 1;
    std::complex<double> eval() const;
    std::string str() const;
};

// Exact character table of PGL(2,q), built from the enumerated group.  Class
// order: identity, unipotent, split classes by ascending exponent, non-split
// classes by ascending exponent.  Character order: lambda_1, lambda_-1 (q
// odd), psi_1, psi_-1 (q odd), eta_1.., nu_1...
class CharacterTable {
public:
    explicit CharacterTable(const PglGroup& group);

    const PglGroup& group() const { return *group_; }
    int q() const { return group_->q(); }
    long long group_order() const { return group_->size(); }

    const std::vector<ConjClass>& classes() const { return classes_; }
    int n_classes() const { return static_cast<int>(classes_.size()); }
    int class_index(const ClassLabel& label) const;  // -1 if absent
    int class_of_element(int element_id) const;

    int n_characters() const { return static_cast<int>(chars_.size()); }
    const CharacterLabel& character(int chi) const { return chars_[chi]; }
    long long degree(int chi) const { return degrees_[chi]; }
    std::complex<double> value(int chi, int cls) const { return values_[chi][cls].eval(); }
    const SymbolicValue& symbolic(int chi, int cls) const { return values_[chi][cls]; }

    struct OrthogonalityReport {
        double max_row_deviation;
        double max_column_deviation;
        bool pass;
    };
    OrthogonalityReport verify_orthogonality(double tol = 1e-9) const;

    // sum of size * chi over the derangement classes, divided by chi(1),
    // snapped to a rational with denominator <= 2
    mpq_class derangement_eigenvalue(int chi, double tol = 1e-6) const;

    std::string to_json() const;

private:
    const PglGroup* group_;
    std::vector<ConjClass> classes_;
    std::vector<int> class_of_element_;
    std::vector<CharacterLabel> chars_;
    std::vector<long long> degrees_;
    std::vector<std::vector<SymbolicValue>> values_;
};

struct SpectrumEntry {
    mpq_class eigenvalue;
    long long multiplicity;  // sum of chi(1)^2 over characters sharing it
    std::vector<std::pair<std::string, long long>> constituents;  // (name, chi(1)^2)
};

// Distinct eigenvalues of the derangement graph, descending.
std::vector<SpectrumEntry> spectrum(const CharacterTable& table);

// |G| / (1 - valency/tau); requires tau < 0 < valency
mpq_class hoffman_bound(const mpq_class& valency, const mpq_class& tau, long long order);

}  // namespace derange
