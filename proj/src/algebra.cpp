#include "qsi/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qsi {

VarKey var_key(const Variable& v) {
    if (v.arrow < 1 || v.arrow > 0xffff || v.row < 1 || v.row > 0xff || v.col < 1 || v.col > 0xff)
        throw std::invalid_argument("variable index out of range");
    return (static_cast<VarKey>(v.arrow) << 16) | (static_cast<VarKey>(v.row) << 8) |
           static_cast<VarKey>(v.col);
}

Variable var_of_key(VarKey k) {
    return Variable{static_cast<int>(k >> 16), static_cast<int>((k >> 8) & 0xff),
                    static_cast<int>(k & 0xff)};
}

Monomial Monomial::of(const Variable& v, int exp) {
    if (exp <= 0) throw std::invalid_argument("exponent must be positive");
    Monomial m;
    m.e_ = {{var_key(v), exp}};
    return m;
}

Monomial::Monomial(std::vector<std::pair<VarKey, int>> factors) : e_(std::move(factors)) {
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i].second <= 0) throw std::invalid_argument("exponent must be positive");
        if (i > 0 && e_[i - 1].first >= e_[i].first)
            throw std::invalid_argument("factors must be strictly sorted by variable");
    }
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [k, e] : e_) d += e;
    return d;
}

int Monomial::exponent(VarKey k) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), k,
                               [](const auto& f, VarKey key) { return f.first < key; });
    return (it != e_.end() && it->first == k) ? it->second : 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    std::size_t i = 0, j = 0;
    while (i < e_.size() && j < o.e_.size()) {
        if (e_[i].first < o.e_[j].first)
            r.e_.push_back(e_[i++]);
        else if (e_[i].first > o.e_[j].first)
            r.e_.push_back(o.e_[j++]);
        else {
            r.e_.push_back({e_[i].first, e_[i].second + o.e_[j].second});
            ++i, ++j;
        }
    }
    for (; i < e_.size(); ++i) r.e_.push_back(e_[i]);
    for (; j < o.e_.size(); ++j) r.e_.push_back(o.e_[j]);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    std::size_t j = 0;
    for (auto& [k, e] : e_) {
        while (j < o.e_.size() && o.e_[j].first < k) ++j;
        if (j == o.e_.size() || o.e_[j].first != k || o.e_[j].second < e) return false;
    }
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0;
    for (auto& [k, e] : o.e_) {
        int sub = 0;
        if (i < e_.size() && e_[i].first == k) sub = e_[i++].second;
        if (sub > e) throw std::invalid_argument("monomial does not divide");
        if (e - sub > 0) r.e_.push_back({k, e - sub});
    }
    if (i != e_.size()) throw std::invalid_argument("monomial does not divide");
    return r;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, e] : e_) {
        if (!first) os << "*";
        first = false;
        Variable v = var_of_key(k);
        os << "x[" << v.arrow << "," << v.row << "," << v.col << "]";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto& [k, e] : m.factors()) {
        h ^= (static_cast<std::size_t>(k) * 0x100000001b3ull) + static_cast<std::size_t>(e);
        h *= 0xc2b2ae3d27d4eb4full;
    }
    return h;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    const auto& x = a.factors();
    const auto& y = b.factors();
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first == y[j].first) {
            if (x[i].second != y[j].second) return x[i].second > y[j].second ? 1 : -1;
            ++i, ++j;
        } else if (x[i].first < y[j].first) {
            // a has a higher-weight variable that b lacks
            return 1;
        } else {
            return -1;
        }
    }
    if (i < x.size()) return 1;
    if (j < y.size()) return -1;
    return 0;
}

const TermOrder& term_order() {
    static const TermOrder ord;
    return ord;
}

namespace {

void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return term_order().compare(a.monomial, b.monomial) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms = std::move(out);
}

}  // namespace

SparsePolynomial SparsePolynomial::constant(Int c) {
    SparsePolynomial p;
    if (c != 0) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
}

SparsePolynomial SparsePolynomial::variable(const Variable& v) {
    return from_monomial(Monomial::of(v));
}

SparsePolynomial SparsePolynomial::from_monomial(Monomial m, Int c) {
    SparsePolynomial p;
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

SparsePolynomial SparsePolynomial::from_terms(std::vector<Term> terms) {
    canonicalize(terms);
    SparsePolynomial p;
    p.terms_ = std::move(terms);
    return p;
}

const Term& SparsePolynomial::leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
    return terms_.front();
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = term_order().compare(terms_[i].monomial, o.terms_[j].monomial);
        if (c > 0)
            merged.push_back(terms_[i++]);
        else if (c < 0)
            merged.push_back(o.terms_[j++]);
        else {
            Int s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) merged.push_back({terms_[i].monomial, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
    SparsePolynomial p;
    p.terms_ = std::move(merged);
    return p;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    return *this + (-o);
}

SparsePolynomial SparsePolynomial::times_scalar(const Int& c) const {
    if (c == 0) return zero();
    SparsePolynomial p(*this);
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

SparsePolynomial SparsePolynomial::times_monomial(const Monomial& m, const Int& c) const {
    if (c == 0) return zero();
    SparsePolynomial p;
    p.terms_.reserve(terms_.size());
    for (auto& t : terms_) p.terms_.push_back({t.monomial.times(m), t.coeff * c});
    // multiplicativity of the order keeps the sorted form
    return p;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    return multiply(*this, o);
}

int SparsePolynomial::total_degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

SparsePolynomial multiply(const SparsePolynomial& f, const SparsePolynomial& g) {
    if (f.is_zero() || g.is_zero()) return SparsePolynomial::zero();
    PolyBuilder b;
    const auto& small = f.term_count() <= g.term_count() ? f : g;
    const auto& large = f.term_count() <= g.term_count() ? g : f;
    for (auto& t : small.terms()) b.add_scaled(large, t.monomial, t.coeff);
    return std::move(b).build();
}

void PolyBuilder::add(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (!inserted) it->second += c;
}

void PolyBuilder::add(const SparsePolynomial& p, const Int& scale) {
    if (scale == 0) return;
    for (auto& t : p.terms()) add(t.monomial, t.coeff * scale);
}

void PolyBuilder::add_scaled(const SparsePolynomial& p, const Monomial& shift, const Int& scale) {
    if (scale == 0) return;
    for (auto& t : p.terms()) add(t.monomial.times(shift), t.coeff * scale);
}

SparsePolynomial PolyBuilder::build() && {
    std::vector<Term> terms;
    terms.reserve(acc_.size());
    for (auto& [m, c] : acc_)
        if (c != 0) terms.push_back({m, std::move(c)});
    acc_.clear();
    return SparsePolynomial::from_terms(std::move(terms));
}

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), m_(rows * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

SparsePolynomial& PolyMatrix::at(int r, int c) {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw std::out_of_range("matrix index");
    return m_[(r - 1) * cols_ + (c - 1)];
}

const SparsePolynomial& PolyMatrix::at(int r, int c) const {
    return const_cast<PolyMatrix*>(this)->at(r, c);
}

PolyMatrix PolyMatrix::arrow_matrix(int arrow, int target_rank, int source_rank) {
    PolyMatrix m(target_rank, source_rank);
    for (int j = 1; j <= target_rank; ++j)
        for (int k = 1; k <= source_rank; ++k)
            m.at(j, k) = SparsePolynomial::variable(Variable{arrow, j, k});
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r(rows_, o.cols_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= o.cols_; ++j) {
            PolyBuilder b;
            for (int k = 1; k <= cols_; ++k) {
                for (auto& t : at(i, k).terms()) b.add_scaled(o.at(k, j), t.monomial, t.coeff);
            }
            r.at(i, j) = std::move(b).build();
        }
    return r;
}

namespace {

SparsePolynomial det_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
    int n = m.rows();
    if (row > n) return SparsePolynomial::constant(1);
    if (static_cast<int>(cols.size()) == 1)
        return m.at(row, cols[0]);
    PolyBuilder b;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        int c = cols[i];
        if (m.at(row, c).is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != i) rest.push_back(cols[j]);
        SparsePolynomial minor = det_rec(m, rest, row + 1);
        Int sign = (i % 2 == 0) ? 1 : -1;
        for (auto& t : m.at(row, c).terms()) b.add_scaled(minor, t.monomial, t.coeff * sign);
    }
    return std::move(b).build();
}

}  // namespace

SparsePolynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::vector<int> cols(m.cols());
    for (int i = 0; i < m.cols(); ++i) cols[i] = i + 1;
    return det_rec(m, cols, 1);
}

std::pair<Monomial, Int> leading_monomial(const SparsePolynomial& f, const TermOrder& ord) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
    const Term* best = &f.terms()[0];
    for (auto& t : f.terms())
        if (ord.compare(t.monomial, best->monomial) > 0) best = &t;
    return {best->monomial, best->coeff};
}

std::string SparsePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Int c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (t.monomial.is_one())
            os << c.str();
        else if (c == 1)
            os << t.monomial.str();
        else
            os << c.str() << "*" << t.monomial.str();
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw std::invalid_argument("polynomial parse error: expected '" + std::string(1, c) + "'");
    }
    Int number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("polynomial parse error: expected number");
        return Int(s.substr(start, i - start));
    }
    int small_number() {
        return static_cast<int>(number());
    }
};

}  // namespace

SparsePolynomial SparsePolynomial::parse(const std::string& text) {
    Parser p{text};
    p.skip_ws();
    if (text.empty()) throw std::invalid_argument("empty polynomial text");
    std::vector<Term> terms;
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.i >= p.s.size()) break;
        int sign = 1;
        if (p.eat('+')) {
        } else if (p.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw std::invalid_argument("polynomial parse error: expected sign");
        }
        first = false;
        p.skip_ws();
        Int coeff = 1;
        bool saw_coeff = false;
        if (p.i < p.s.size() && std::isdigit(static_cast<unsigned char>(p.s[p.i]))) {
            coeff = p.number();
            saw_coeff = true;
        }
        std::vector<std::pair<VarKey, int>> factors;
        bool expect_factor = !saw_coeff;
        while (true) {
            if (saw_coeff || !factors.empty()) {
                std::size_t save = p.i;
                if (!p.eat('*')) {
                    p.i = save;
                    break;
                }
            }
            p.skip_ws();
            if (p.i >= p.s.size() || p.s[p.i] != 'x') {
                if (expect_factor && factors.empty())
                    throw std::invalid_argument("polynomial parse error: expected term");
                break;
            }
            ++p.i;
            p.expect('[');
            int a = p.small_number();
            p.expect(',');
            int r = p.small_number();
            p.expect(',');
            int c = p.small_number();
            p.expect(']');
            int e = 1;
            if (p.eat('^')) e = p.small_number();
            factors.push_back({var_key(Variable{a, r, c}), e});
        }
        std::sort(factors.begin(), factors.end());
        std::vector<std::pair<VarKey, int>> merged;
        for (auto& f : factors) {
            if (!merged.empty() && merged.back().first == f.first)
                merged.back().second += f.second;
            else
                merged.push_back(f);
        }
        terms.push_back({Monomial(std::move(merged)), coeff * sign});
    }
    return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }
std::ostream& operator<<(std::ostream& os, const SparsePolynomial& p) { return os << p.str(); }

}  // namespace qsi
