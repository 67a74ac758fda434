#include "derange/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace derange {

mpq_class snap_half_integer(double x, double tol) {
    double doubled = std::round(2.0 * x);
    if (std::abs(2.0 * x - doubled) > 2.0 * tol)
        throw std::domain_error("snap_half_integer: value " + std::to_string(x) +
                                " is not a half-integer within tolerance");
    return mpq_from(static_cast<long long>(doubled), 2);
}

std::string rational_string(const mpq_class& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::complex<double> SymbolicValue::eval() const {
    double v = static_cast<double>(integer);
    if (cos_coeff) v += cos_coeff * 2.0 * std::cos(2.0 * std::numbers::pi * m / order);
    return {v, 0.0};
}

std::string SymbolicValue::str() const {
    if (!cos_coeff) return std::to_string(integer);
    std::string s;
    if (integer) s = std::to_string(integer) + (cos_coeff > 0 ? "+" : "");
    if (cos_coeff == -1)
        s += "-";
    else if (cos_coeff != 1)
        s += std::to_string(cos_coeff) + "*";
    s += "2cos(2pi*" + std::to_string(m) + "/" + std::to_string(order) + ")";
    return s;
}

CharacterTable::CharacterTable(const PglGroup& group) : group_(&group) {
    const int q = group.q();
    const bool odd = q % 2 == 1;

    // classes in canonical order, sizes and representatives from the tally
    std::map<ClassLabel, std::pair<long long, int>> tally;  // label -> (size, first id)
    for (int i = 0; i < group.size(); ++i) {
        auto [it, fresh] = tally.try_emplace(group.classify(i), 0, i);
        ++it->second.first;
        (void)fresh;
    }
    std::vector<ClassLabel> order;
    order.push_back({ClassKind::Identity, 0});
    order.push_back({ClassKind::Unipotent, 0});
    for (int e = 1; e <= (q - 1) / 2; ++e)
        if (tally.count({ClassKind::Split, e})) order.push_back({ClassKind::Split, e});
    for (int e = 1; e <= (q + 1) / 2; ++e)
        if (tally.count({ClassKind::NonSplit, e})) order.push_back({ClassKind::NonSplit, e});
    if (order.size() != tally.size()) throw std::logic_error("CharacterTable: unexpected class labels");
    for (const auto& label : order) {
        auto [size, rep] = tally.at(label);
        classes_.push_back({label, size, rep, class_label_string(label)});
    }
    class_of_element_.resize(group.size());
    for (int i = 0; i < group.size(); ++i) class_of_element_[i] = class_index(group.classify(i));

    // epsilon on each non-split class, read off a representative
    std::map<int, int> eps_nonsplit;  // class exp -> +-1
    for (const auto& c : classes_)
        if (c.label.kind == ClassKind::NonSplit)
            eps_nonsplit[c.label.exp] = group.psl_member(c.rep_id) ? 1 : -1;

    const int n_eta = odd ? (q - 1) / 2 : q / 2;
    const int n_nu = odd ? (q - 3) / 2 : q / 2 - 1;

    auto add_char = [&](CharKind kind, int j, std::string name, long long deg) {
        chars_.push_back({kind, j, std::move(name)});
        degrees_.push_back(deg);
    };
    add_char(CharKind::Lambda1, 0, "lambda_1", 1);
    if (odd) add_char(CharKind::LambdaMinus1, 0, "lambda_-1", 1);
    add_char(CharKind::Psi1, 0, "psi_1", q);
    if (odd) add_char(CharKind::PsiMinus1, 0, "psi_-1", q);
    for (int j = 1; j <= n_eta; ++j) add_char(CharKind::Eta, j, "eta_" + std::to_string(j), q - 1);
    for (int j = 1; j <= n_nu; ++j) add_char(CharKind::Nu, j, "nu_" + std::to_string(j), q + 1);

    values_.assign(chars_.size(), std::vector<SymbolicValue>(classes_.size()));
    for (std::size_t ci = 0; ci < chars_.size(); ++ci) {
        const auto& ch = chars_[ci];
        for (std::size_t cj = 0; cj < classes_.size(); ++cj) {
            const auto& cl = classes_[cj].label;
            SymbolicValue v;
            switch (ch.kind) {
                case CharKind::Lambda1:
                    v.integer = 1;
                    break;
                case CharKind::LambdaMinus1:
                    if (cl.kind == ClassKind::Split)
                        v.integer = cl.exp % 2 ? -1 : 1;
                    else if (cl.kind == ClassKind::NonSplit)
                        v.integer = eps_nonsplit.at(cl.exp);
                    else
                        v.integer = 1;
                    break;
                case CharKind::Psi1:
                    if (cl.kind == ClassKind::Identity)
                        v.integer = q;
                    else if (cl.kind == ClassKind::Unipotent)
                        v.integer = 0;
                    else
                        v.integer = cl.kind == ClassKind::Split ? 1 : -1;
                    break;
                case CharKind::PsiMinus1:
                    if (cl.kind == ClassKind::Identity)
                        v.integer = q;
                    else if (cl.kind == ClassKind::Unipotent)
                        v.integer = 0;
                    else if (cl.kind == ClassKind::Split)
                        v.integer = cl.exp % 2 ? -1 : 1;
                    else
                        v.integer = -eps_nonsplit.at(cl.exp);
                    break;
                case CharKind::Eta:
                    if (cl.kind == ClassKind::Identity)
                        v.integer = q - 1;
                    else if (cl.kind == ClassKind::Unipotent)
                        v.integer = -1;
                    else if (cl.kind == ClassKind::NonSplit) {
                        // -beta(r) - beta(r^-1) with beta_j of order > 2
                        v.cos_coeff = -1;
                        v.m = ch.j * cl.exp % (q + 1);
                        v.order = q + 1;
                    }
                    break;
                case CharKind::Nu:
                    if (cl.kind == ClassKind::Identity)
                        v.integer = q + 1;
                    else if (cl.kind == ClassKind::Unipotent)
                        v.integer = 1;
                    else if (cl.kind == ClassKind::Split) {
                        // gamma(x) + gamma(x^-1)
                        v.cos_coeff = 1;
                        v.m = ch.j * cl.exp % (q - 1);
                        v.order = q - 1;
                    }
                    break;
            }
            values_[ci][cj] = v;
        }
    }

    long long sq = 0;
    for (auto d : degrees_) sq += d * d;
    if (sq != group.size()) throw std::logic_error("CharacterTable: degree squares do not sum to |G|");
}

int CharacterTable::class_index(const ClassLabel& label) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].label == label) return static_cast<int>(i);
    return -1;
}

int CharacterTable::class_of_element(int element_id) const { return class_of_element_[element_id]; }

CharacterTable::OrthogonalityReport CharacterTable::verify_orthogonality(double tol) const {
    const double order = static_cast<double>(group_->size());
    OrthogonalityReport rep{0.0, 0.0, true};
    for (int a = 0; a < n_characters(); ++a) {
        for (int b = 0; b < n_characters(); ++b) {
            std::complex<double> sum = 0;
            for (int c = 0; c < n_classes(); ++c)
                sum += static_cast<double>(classes_[c].size) * value(a, c) * std::conj(value(b, c));
            sum /= order;
            double dev = std::abs(sum - (a == b ? 1.0 : 0.0));
            rep.max_row_deviation = std::max(rep.max_row_deviation, dev);
        }
    }
    for (int c = 0; c < n_classes(); ++c) {
        for (int d = 0; d < n_classes(); ++d) {
            std::complex<double> sum = 0;
            for (int a = 0; a < n_characters(); ++a) sum += value(a, c) * std::conj(value(a, d));
            double expect = c == d ? order / static_cast<double>(classes_[c].size) : 0.0;
            double dev = std::abs(sum - expect) / std::max(1.0, expect);
            rep.max_column_deviation = std::max(rep.max_column_deviation, dev);
        }
    }
    rep.pass = rep.max_row_deviation <= tol && rep.max_column_deviation <= tol;
    return rep;
}

mpq_class CharacterTable::derangement_eigenvalue(int chi, double tol) const {
    double sum = 0;
    for (int c = 0; c < n_classes(); ++c)
        if (classes_[c].label.kind == ClassKind::NonSplit)
            sum += static_cast<double>(classes_[c].size) * value(chi, c).real();
    return snap_half_integer(sum / static_cast<double>(degrees_[chi]), tol);
}

std::string CharacterTable::to_json() const {
    nlohmann::ordered_json j;
    j["q"] = q();
    j["group_order"] = group_order();
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& c : classes_)
        j["classes"].push_back({{"name", c.name}, {"size", c.size}});
    j["characters"] = nlohmann::ordered_json::array();
    for (int a = 0; a < n_characters(); ++a) {
        nlohmann::ordered_json row;
        row["name"] = chars_[a].name;
        row["degree"] = degrees_[a];
        row["values"] = nlohmann::ordered_json::array();
        row["symbolic"] = nlohmann::ordered_json::array();
        for (int c = 0; c < n_classes(); ++c) {
            auto v = value(a, c);
            row["values"].push_back({v.real(), v.imag()});
            row["symbolic"].push_back(values_[a][c].str());
        }
        j["characters"].push_back(row);
    }
    return j.dump(2);
}

std::vector<SpectrumEntry> spectrum(const CharacterTable& table) {
    std::map<mpq_class, SpectrumEntry, std::greater<mpq_class>> merged;
    for (int chi = 0; chi < table.n_characters(); ++chi) {
        mpq_class ev = table.derangement_eigenvalue(chi);
        auto& entry = merged.try_emplace(ev, SpectrumEntry{ev, 0, {}}).first->second;
        long long d2 = table.degree(chi) * table.degree(chi);
        entry.multiplicity += d2;
        entry.constituents.emplace_back(table.character(chi).name, d2);
    }
    std::vector<SpectrumEntry> out;
    out.reserve(merged.size());
    for (auto& [ev, entry] : merged) out.push_back(std::move(entry));
    return out;
}

mpq_class hoffman_bound(const mpq_class& valency, const mpq_class& tau, long long order) {
    if (tau >= 0) throw std::domain_error("hoffman_bound: tau must be negative");
    if (valency <= 0) throw std::domain_error("hoffman_bound: valency must be positive");
    return mpq_from(order) / (1 - valency / tau);
}

}  // namespace derange
