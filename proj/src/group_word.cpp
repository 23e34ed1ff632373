#include "braidlab/group_word.hpp"

#include <algorithm>
#include <sstream>

#include "braidlab/error.hpp"

namespace braidlab {

GroupWord::GroupWord(std::vector<int> letters) {
    letters_.reserve(letters.size());
    for (int x : letters) {
        if (x == 0) throw PreconditionError("zero letter");
        if (!letters_.empty() && letters_.back() == -x) letters_.pop_back();
        else letters_.push_back(x);
    }
}

GroupWord GroupWord::generator(int index, int exponent) {
    std::vector<int> l;
    int x = exponent > 0 ? index + 1 : -(index + 1);
    for (int i = 0; i < std::abs(exponent); ++i) l.push_back(x);
    return GroupWord(std::move(l));
}

GroupWord GroupWord::inverse() const {
    GroupWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
    return w;
}

GroupWord& GroupWord::operator*=(const GroupWord& o) {
    size_t i = 0;
    while (i < o.letters_.size() && !letters_.empty() && letters_.back() == -o.letters_[i]) {
        letters_.pop_back();
        ++i;
    }
    letters_.insert(letters_.end(), o.letters_.begin() + static_cast<std::ptrdiff_t>(i), o.letters_.end());
    return *this;
}

std::vector<std::int64_t> GroupWord::exponent_sums(int generators) const {
    std::vector<std::int64_t> out(generators, 0);
    for (int x : letters_) {
        int i = letter_index(x);
        if (i >= generators) throw PreconditionError("letter outside generator range");
        out[i] += letter_sign(x);
    }
    return out;
}

bool GroupWord::mentions(int index) const {
    return std::any_of(letters_.begin(), letters_.end(), [&](int x) { return letter_index(x) == index; });
}

int GroupWord::max_generator() const {
    int m = -1;
    for (int x : letters_) m = std::max(m, letter_index(x));
    return m;
}

GroupWord GroupWord::commutator(const GroupWord& u, const GroupWord& v) {
    return u * v * u.inverse() * v.inverse();
}

GroupWord GroupWord::cyclically_reduced() const {
    size_t a = 0, b = letters_.size();
    while (b - a >= 2 && letters_[a] == -letters_[b - 1]) {
        ++a;
        --b;
    }
    GroupWord w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(a), letters_.begin() + static_cast<std::ptrdiff_t>(b));
    return w;
}

GroupWord GroupWord::substitute(const std::vector<GroupWord>& images) const {
    GroupWord out;
    for (int x : letters_) {
        int i = letter_index(x);
        if (i >= static_cast<int>(images.size())) throw PreconditionError("substitution misses a generator");
        out *= x > 0 ? images[i] : images[i].inverse();
    }
    return out;
}

std::string GroupWord::to_string(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    for (size_t k = 0; k < letters_.size(); ++k) {
        if (k) out << " ";
        int i = letter_index(letters_[k]);
        if (i < static_cast<int>(names.size())) out << names[i];
        else out << "g" << i;
        if (letters_[k] < 0) out << "^-1";
    }
    return out.str();
}

namespace {

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const size_t n = a.size();
    for (size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool equal_up_to_cyclic_and_inverse(const GroupWord& a, const GroupWord& b) {
    auto ca = a.cyclically_reduced();
    auto cb = b.cyclically_reduced();
    return cyclic_equal(ca.letters(), cb.letters()) || cyclic_equal(ca.letters(), cb.inverse().letters());
}

bool split_commutator(const GroupWord& w, GroupWord* u, GroupWord* v) {
    const auto& l = w.letters();
    const size_t n = l.size();
    if (n % 2 != 0) return false;
    const size_t half = n / 2;
    for (size_t i = 1; i < half; ++i) {
        size_t j = half - i;
        std::vector<int> uu(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<int> vv(l.begin() + static_cast<std::ptrdiff_t>(i), l.begin() + static_cast<std::ptrdiff_t>(i + j));
        GroupWord U(uu), V(vv);
        if (U.length() != i || V.length() != j) continue;
        if (GroupWord::commutator(U, V) == w) {
            if (u) *u = U;
            if (v) *v = V;
            return true;
        }
    }
    return false;
}

std::vector<GroupWord> Presentation::relator_words() const {
    std::vector<GroupWord> out;
    for (const auto& r : relators) out.push_back(r.word);
    return out;
}

void Presentation::add_relator(GroupWord w, std::string origin) {
    Relator r;
    r.word = std::move(w);
    r.origin = std::move(origin);
    relators.push_back(std::move(r));
}

void Presentation::add_commutator(GroupWord u, GroupWord v, std::string origin) {
    Relator r;
    r.word = GroupWord::commutator(u, v);
    r.is_commutator = true;
    r.left = std::move(u);
    r.right = std::move(v);
    r.origin = std::move(origin);
    relators.push_back(std::move(r));
}

Abelianization abelianization(const Presentation& p) {
    const int g = p.generator_count();
    DenseMatrix m;
    for (const auto& r : p.relators) {
        auto sums = r.word.exponent_sums(g);
        std::vector<Integer> row(g);
        bool any = false;
        for (int i = 0; i < g; ++i) {
            row[i] = Integer(static_cast<long>(sums[i]));
            any = any || sums[i] != 0;
        }
        if (any) m.push_back(std::move(row));
    }
    Abelianization a;
    if (m.empty()) {
        a.rank = g;
        return a;
    }
    auto s = smith(m);
    a.rank = g - s.rank;
    a.torsion = s.torsion;
    return a;
}

std::string format_word_plain(const GroupWord& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int x : w.letters()) {
        if (!first) out << " ";
        first = false;
        out << "g" << letter_index(x);
        if (x < 0) out << "^-1";
    }
    return out.str();
}

GroupWord parse_word_plain(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<int> letters;
    while (in >> tok) {
        if (tok == "1") continue;
        if (tok.size() < 2 || tok[0] != 'g') throw ParseError("bad word token '" + tok + "'");
        int sign = 1;
        std::string num = tok.substr(1);
        auto caret = num.find('^');
        if (caret != std::string::npos) {
            std::string ex = num.substr(caret + 1);
            if (ex == "-1") sign = -1;
            else if (ex != "1") throw ParseError("only exponents +-1 are supported: '" + tok + "'");
            num = num.substr(0, caret);
        }
        int idx;
        try {
            size_t pos = 0;
            idx = std::stoi(num, &pos);
            if (pos != num.size() || idx < 0) throw std::invalid_argument(num);
        } catch (const std::exception&) {
            throw ParseError("bad generator index in '" + tok + "'");
        }
        letters.push_back(sign * (idx + 1));
    }
    return GroupWord(std::move(letters));
}

std::string format_presentation(const Presentation& p) {
    std::ostringstream out;
    for (int i = 0; i < p.generator_count(); ++i) out << "gen " << i << " := " << p.generators[i] << "\n";
    for (size_t i = 0; i < p.relators.size(); ++i) out << "rel " << i << " := " << format_word_plain(p.relators[i].word) << "\n";
    return out.str();
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto assign = line.find(":=");
        if (assign == std::string::npos) throw ParseError("expected ':=' in '" + line + "'");
        std::istringstream head(line.substr(0, assign));
        std::string kw;
        int idx = -1;
        head >> kw >> idx;
        std::string rest = line.substr(assign + 2);
        rest.erase(0, rest.find_first_not_of(' '));
        if (kw == "gen") {
            if (idx != p.generator_count()) throw ParseError("generators must be listed in order");
            p.generators.push_back(rest);
        } else if (kw == "rel") {
            p.add_relator(parse_word_plain(rest));
        } else {
            throw ParseError("unknown line kind '" + kw + "'");
        }
    }
    return p;
}

}  // namespace braidlab
