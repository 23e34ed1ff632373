#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidlab/group_word.hpp"
#include "braidlab/intmat.hpp"

namespace braidlab {

using Class1 = std::vector<Integer>;  // over the dual generator basis
using Class2 = std::vector<Integer>;  // over the dual relator basis

Class1 dual_class(int generators, const std::vector<std::pair<int, long>>& terms);

// x*_i cup x*_j = sum_k eps_ij(r_k) r*_k, extended bilinearly.
Class2 cup(const Presentation& p, const Class1& a, const Class1& b);

// Per relator [u,v]: sum over x in X, y in Y of e_x(u)e_y(v) - e_x(v)e_y(u).
std::vector<Integer> cup_zero_sums(const Presentation& p, const std::vector<int>& X, const std::vector<int>& Y);

// Checked both per relator pair and through cup(sum x*, sum y*).
bool cup_zero_condition(const Presentation& p, const std::vector<int>& X, const std::vector<int>& Y);

Class2 massey_rep(const Presentation& p, const Class1& a, const Class1& b, const Class1& c);

struct Lattice {
    int dim = 0;
    std::vector<Class2> generators;
    DenseMatrix hnf;
    bool contains(const Class2& v) const { return lattice_contains(hnf, v); }
};
Lattice make_lattice(std::vector<Class2> generators, int dim);

// alpha cup H^1 + H^1 cup gamma
Lattice indeterminacy(const Presentation& p, const Class1& a, const Class1& c);

struct MasseyCertificate {
    std::vector<std::string> generators;
    std::vector<std::string> relators;
    Class1 alpha, beta, gamma;
    Class2 rho;
    std::vector<Class2> lattice_basis;
    DenseMatrix hnf;
    bool member = true;
    std::string verdict;  // "non-raag" when rho is outside the lattice

    bool nontrivial() const { return !member; }
};

MasseyCertificate massey_nontrivial(const Presentation& p, const Class1& a, const Class1& b, const Class1& c);

// Re-decide membership from the stored rho and lattice; no Morse theory.
bool revalidate(const MasseyCertificate& cert);

nlohmann::json to_json(const MasseyCertificate& cert);
MasseyCertificate certificate_from_json(const nlohmann::json& j);

// H^2 is free on the relator duals only when the relator count equals b2.
std::optional<std::string> certificate_refusal(const Presentation& p, std::int64_t beta2);

}  // namespace braidlab
