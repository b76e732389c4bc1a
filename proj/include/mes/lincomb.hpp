#pragma once

#include "mes/rational.hpp"

#include <map>

namespace mes {

// Finitely supported linear combination over a totally ordered basis B with
// exact rational coefficients.  Zero coefficients are never stored, so
// structural equality is equality of values.
template <class B>
class LinComb {
public:
    LinComb() = default;

    static LinComb unit(const B& b, const Rational& c = Rational(1))
    {
        LinComb r;
        r.add(b, c);
        return r;
    }

    void add(const B& b, const Rational& c)
    {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o)
    {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o)
    {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const B& b) const
    {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Sum of all coefficients.
    Rational mass() const
    {
        Rational m(0);
        for (const auto& [b, c] : terms_) m += c;
        return m;
    }

    const std::map<B, Rational>& terms() const { return terms_; }

    bool operator==(const LinComb&) const = default;

    // Linear extension of a basis map b -> LinComb<C>.
    template <class C, class F>
    LinComb<C> mapped(F&& f) const
    {
        LinComb<C> out;
        for (const auto& [b, c] : terms_) {
            LinComb<C> img = f(b);
            img *= c;
            out += img;
        }
        return out;
    }

private:
    std::map<B, Rational> terms_;
};

} // namespace mes
