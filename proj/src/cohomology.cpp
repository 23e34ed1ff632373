#include "braidlab/cohomology.hpp"

#include <sstream>

#include "braidlab/error.hpp"
#include "braidlab/fox.hpp"

namespace braidlab {

namespace {

void require_commutator_related(const Presentation& p) {
    if (!is_commutator_related(p.relator_words(), p.generator_count()))
        throw PreconditionError("presentation is not commutator-related");
}

void require_length(const Class1& a, const Presentation& p) {
    if (static_cast<int>(a.size()) != p.generator_count())
        throw PreconditionError("class length must equal the number of generators");
}

bool is_zero(const Class2& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::string show(const Class2& v) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
    out << ")";
    return out.str();
}

Integer sum_over(const std::vector<std::int64_t>& sums, const std::vector<int>& idx) {
    Integer s = 0;
    for (int i : idx) s += static_cast<long>(sums.at(i));
    return s;
}

nlohmann::json int_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Integer json_int(const nlohmann::json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(static_cast<long>(j.get<std::int64_t>()));
}

nlohmann::json vec_json(const std::vector<Integer>& v) {
    auto a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(int_json(x));
    return a;
}

std::vector<Integer> json_vec(const nlohmann::json& j) {
    std::vector<Integer> v;
    for (const auto& x : j) v.push_back(json_int(x));
    return v;
}

}  // namespace

Class1 dual_class(int generators, const std::vector<std::pair<int, long>>& terms) {
    Class1 c(generators, 0);
    for (auto [i, coef] : terms) {
        if (i < 0 || i >= generators) throw PreconditionError("generator index out of range");
        c[i] += coef;
    }
    return c;
}

Class2 cup(const Presentation& p, const Class1& a, const Class1& b) {
    require_commutator_related(p);
    require_length(a, p);
    require_length(b, p);
    Class2 out;
    for (const auto& r : p.relators) out.push_back(eps_weighted({a, b}, r.word));
    return out;
}

std::vector<Integer> cup_zero_sums(const Presentation& p, const std::vector<int>& X, const std::vector<int>& Y) {
    const int g = p.generator_count();
    std::vector<Integer> out;
    for (const auto& r : p.relators) {
        GroupWord u = r.left, v = r.right;
        if (!r.is_commutator && !split_commutator(r.word, &u, &v))
            throw PreconditionError("relator " + format_word_plain(r.word) + " is not a commutator");
        auto eu = u.exponent_sums(g), ev = v.exponent_sums(g);
        out.push_back(sum_over(eu, X) * sum_over(ev, Y) - sum_over(ev, X) * sum_over(eu, Y));
    }
    return out;
}

bool cup_zero_condition(const Presentation& p, const std::vector<int>& X, const std::vector<int>& Y) {
    const int g = p.generator_count();
    bool zero = true;
    for (const auto& v : cup_zero_sums(p, X, Y)) zero = zero && v == 0;
    Class1 cx(g, 0), cy(g, 0);
    for (int x : X) cx.at(x) += 1;
    for (int y : Y) cy.at(y) += 1;
    bool via_cup = is_zero(cup(p, cx, cy));
    if (via_cup != zero) throw InvariantViolation("cup-zero test disagrees with the cup product");
    return zero;
}

Class2 massey_rep(const Presentation& p, const Class1& a, const Class1& b, const Class1& c) {
    auto ab = cup(p, a, b);
    if (!is_zero(ab)) throw PreconditionError("alpha cup beta = " + show(ab) + " is not zero");
    auto bc = cup(p, b, c);
    if (!is_zero(bc)) throw PreconditionError("beta cup gamma = " + show(bc) + " is not zero");
    Class2 out;
    for (const auto& r : p.relators) out.push_back(eps_weighted({a, b, c}, r.word));
    return out;
}

Lattice make_lattice(std::vector<Class2> generators, int dim) {
    Lattice l;
    l.dim = dim;
    for (const auto& v : generators)
        if (static_cast<int>(v.size()) != dim) throw PreconditionError("lattice vector has the wrong length");
    l.hnf = hermite_normal_form(generators, dim);
    l.generators = std::move(generators);
    return l;
}

Lattice indeterminacy(const Presentation& p, const Class1& a, const Class1& c) {
    const int g = p.generator_count();
    std::vector<Class2> gens;
    for (int i = 0; i < g; ++i) {
        Class1 x(g, 0);
        x[i] = 1;
        auto l = cup(p, a, x);
        auto r = cup(p, x, c);
        if (!is_zero(l)) gens.push_back(std::move(l));
        if (!is_zero(r)) gens.push_back(std::move(r));
    }
    return make_lattice(std::move(gens), static_cast<int>(p.relators.size()));
}

MasseyCertificate massey_nontrivial(const Presentation& p, const Class1& a, const Class1& b, const Class1& c) {
    MasseyCertificate cert;
    cert.generators = p.generators;
    for (const auto& r : p.relators) cert.relators.push_back(format_word_plain(r.word));
    cert.alpha = a;
    cert.beta = b;
    cert.gamma = c;
    cert.rho = massey_rep(p, a, b, c);
    auto lat = indeterminacy(p, a, c);
    cert.lattice_basis = lat.generators;
    cert.hnf = lat.hnf;
    cert.member = lat.contains(cert.rho);
    cert.verdict = cert.member ? "massey-trivial" : "non-raag";
    return cert;
}

bool revalidate(const MasseyCertificate& cert) {
    auto hnf = hermite_normal_form(cert.lattice_basis, static_cast<int>(cert.rho.size()));
    if (hnf != cert.hnf) return false;
    return lattice_contains(hnf, cert.rho) == cert.member;
}

nlohmann::json to_json(const MasseyCertificate& c) {
    nlohmann::json j;
    j["generators"] = c.generators;
    j["relators"] = c.relators;
    j["alpha"] = vec_json(c.alpha);
    j["beta"] = vec_json(c.beta);
    j["gamma"] = vec_json(c.gamma);
    j["rho"] = vec_json(c.rho);
    j["lattice_basis"] = nlohmann::json::array();
    for (const auto& v : c.lattice_basis) j["lattice_basis"].push_back(vec_json(v));
    j["hnf"] = nlohmann::json::array();
    for (const auto& v : c.hnf) j["hnf"].push_back(vec_json(v));
    j["member"] = c.member;
    j["verdict"] = c.verdict;
    return j;
}

MasseyCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        MasseyCertificate c;
        c.generators = j.at("generators").get<std::vector<std::string>>();
        c.relators = j.at("relators").get<std::vector<std::string>>();
        c.alpha = json_vec(j.at("alpha"));
        c.beta = json_vec(j.at("beta"));
        c.gamma = json_vec(j.at("gamma"));
        c.rho = json_vec(j.at("rho"));
        for (const auto& v : j.at("lattice_basis")) c.lattice_basis.push_back(json_vec(v));
        for (const auto& v : j.at("hnf")) c.hnf.push_back(json_vec(v));
        c.member = j.at("member").get<bool>();
        c.verdict = j.at("verdict").get<std::string>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

std::optional<std::string> certificate_refusal(const Presentation& p, std::int64_t beta2) {
    if (static_cast<std::int64_t>(p.relators.size()) == beta2) return std::nullopt;
    return "certificate unavailable: inefficient presentation (" + std::to_string(p.relators.size()) +
           " relators, b2 = " + std::to_string(beta2) + ")";
}

}  // namespace braidlab
