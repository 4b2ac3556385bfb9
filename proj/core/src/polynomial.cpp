#include "flowrec/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace flowrec {

namespace {

std::string power_string(std::string_view var, int deg) {
    std::string s(var);
    if (deg > 1) s += "^" + std::to_string(deg);
    return s;
}

// Renders |coeff| * monomial, with unit coefficients omitted on
// non-constant monomials. The sign is handled by the caller.
std::string term_string(const Rat& abs_coeff, const std::string& monomial) {
    if (monomial.empty()) return to_string(abs_coeff);
    if (abs_coeff == 1) return monomial;
    return to_string(abs_coeff) + "*" + monomial;
}

std::string join_terms(const std::vector<std::pair<Rat, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [coeff, monomial] : terms) {
        const bool negative = coeff < 0;
        const Rat abs_coeff = negative ? Rat(-coeff) : coeff;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        out += term_string(abs_coeff, monomial);
    }
    return out;
}

} // namespace

ExactPolynomial::ExactPolynomial(std::vector<Rat> ascending_coefficients)
    : coefficients_(std::move(ascending_coefficients)) {
    trim();
}

ExactPolynomial ExactPolynomial::constant(const Rat& c) {
    return ExactPolynomial(std::vector<Rat>{c});
}

ExactPolynomial ExactPolynomial::variable() {
    return ExactPolynomial(std::vector<Rat>{Rat(0), Rat(1)});
}

void ExactPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rat ExactPolynomial::coefficient(int d) const {
    if (d < 0 || d >= static_cast<int>(coefficients_.size())) return Rat(0);
    return coefficients_[static_cast<size_t>(d)];
}

Rat ExactPolynomial::leading_coefficient() const {
    return coefficients_.empty() ? Rat(0) : coefficients_.back();
}

bool ExactPolynomial::integer_coefficients() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(),
                       [](const Rat& c) { return is_integer(c); });
}

Rat ExactPolynomial::evaluate(const Int& x) const {
    Rat result(0);
    const Rat rx(x);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        result = result * rx + *it;
    }
    return result;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& other) {
    if (other.coefficients_.size() > coefficients_.size()) {
        coefficients_.resize(other.coefficients_.size(), Rat(0));
    }
    for (size_t i = 0; i < other.coefficients_.size(); ++i) {
        coefficients_[i] += other.coefficients_[i];
    }
    trim();
    return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& other) {
    if (other.coefficients_.size() > coefficients_.size()) {
        coefficients_.resize(other.coefficients_.size(), Rat(0));
    }
    for (size_t i = 0; i < other.coefficients_.size(); ++i) {
        coefficients_[i] -= other.coefficients_[i];
    }
    trim();
    return *this;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return ExactPolynomial();
    std::vector<Rat> product(a.coefficients_.size() + b.coefficients_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (size_t j = 0; j < b.coefficients_.size(); ++j) {
            product[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return ExactPolynomial(std::move(product));
}

ExactPolynomial operator*(const Rat& s, const ExactPolynomial& p) {
    std::vector<Rat> scaled = p.coefficients_;
    for (Rat& c : scaled) c *= s;
    return ExactPolynomial(std::move(scaled));
}

ExactPolynomial ExactPolynomial::shifted(int n) const {
    if (n < 0) throw std::invalid_argument("shift exponent must be non-negative");
    if (is_zero()) return {};
    std::vector<Rat> shifted(static_cast<size_t>(n), Rat(0));
    shifted.insert(shifted.end(), coefficients_.begin(), coefficients_.end());
    return ExactPolynomial(std::move(shifted));
}

std::string ExactPolynomial::to_string(std::string_view variable) const {
    std::vector<std::pair<Rat, std::string>> terms;
    for (size_t d = 0; d < coefficients_.size(); ++d) {
        if (coefficients_[d] == 0) continue;
        terms.emplace_back(coefficients_[d],
                           d == 0 ? std::string() : power_string(variable, static_cast<int>(d)));
    }
    return join_terms(terms);
}

ExactPolynomial interpolate(const std::vector<std::pair<Int, Rat>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolate: at least one point required");
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("interpolate: duplicate abscissa " +
                                            to_string(points[i].first));
            }
        }
    }
    // Newton divided differences.
    std::vector<Rat> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            const Rat denom(points[i].first - points[i - level].first);
            dd[i] = (dd[i] - dd[i - 1]) / denom;
        }
    }
    // Horner assembly of sum dd[i] * prod_{j<i} (X - x_j).
    ExactPolynomial result = ExactPolynomial::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        ExactPolynomial factor(std::vector<Rat>{Rat(-points[i].first), Rat(1)});
        result = result * factor + ExactPolynomial::constant(dd[i]);
    }
    return result;
}

BivariatePolynomial BivariatePolynomial::constant(const Int& c) {
    return monomial(0, 0, c);
}

BivariatePolynomial BivariatePolynomial::variable_x() {
    return monomial(1, 0, Int(1));
}

BivariatePolynomial BivariatePolynomial::variable_y() {
    return monomial(0, 1, Int(1));
}

BivariatePolynomial BivariatePolynomial::monomial(int xdeg, int ydeg, const Int& c) {
    BivariatePolynomial p;
    if (c != 0) p.coefficients_[{xdeg, ydeg}] = c;
    return p;
}

Int BivariatePolynomial::coefficient(int xdeg, int ydeg) const {
    auto it = coefficients_.find({xdeg, ydeg});
    return it == coefficients_.end() ? Int(0) : it->second;
}

Rat BivariatePolynomial::evaluate(const Rat& x, const Rat& y) const {
    Rat result(0);
    for (const auto& [deg, coeff] : coefficients_) {
        result += Rat(coeff) * pow_rat(x, static_cast<unsigned long>(deg.first)) *
                  pow_rat(y, static_cast<unsigned long>(deg.second));
    }
    return result;
}

Int BivariatePolynomial::evaluate(const Int& x, const Int& y) const {
    Int result(0);
    for (const auto& [deg, coeff] : coefficients_) {
        result += coeff * pow_int(x, static_cast<unsigned long>(deg.first)) *
                  pow_int(y, static_cast<unsigned long>(deg.second));
    }
    return result;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
    for (const auto& [deg, coeff] : other.coefficients_) {
        Int& slot = coefficients_[deg];
        slot += coeff;
        if (slot == 0) coefficients_.erase(deg);
    }
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial product;
    for (const auto& [da, ca] : a.coefficients_) {
        for (const auto& [db, cb] : b.coefficients_) {
            const std::pair<int, int> deg{da.first + db.first, da.second + db.second};
            Int& slot = product.coefficients_[deg];
            slot += ca * cb;
            if (slot == 0) product.coefficients_.erase(deg);
        }
    }
    return product;
}

std::string BivariatePolynomial::to_string() const {
    std::vector<std::pair<std::pair<int, int>, Int>> terms(coefficients_.begin(),
                                                           coefficients_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int ta = a.first.first + a.first.second;
        const int tb = b.first.first + b.first.second;
        if (ta != tb) return ta < tb;
        return a.first.second < b.first.second;
    });
    std::vector<std::pair<Rat, std::string>> rendered;
    for (const auto& [deg, coeff] : terms) {
        std::string monomial;
        if (deg.first > 0) monomial = power_string("x", deg.first);
        if (deg.second > 0) {
            if (!monomial.empty()) monomial += "*";
            monomial += power_string("y", deg.second);
        }
        rendered.emplace_back(Rat(coeff), monomial);
    }
    return join_terms(rendered);
}

} // namespace flowrec
