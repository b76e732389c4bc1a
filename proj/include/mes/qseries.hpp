#pragma once

#include "mes/rational.hpp"

#include <vector>

namespace mes {

// Truncated formal power series in q with exact rational coefficients
// c_0..c_M.  Mixing truncation orders resolves to the smaller one, so no
// phantom precision can appear.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {}

    int order() const { return order_; }

    const Rational& coeff(int n) const { return c_[static_cast<std::size_t>(n)]; }
    void set_coeff(int n, const Rational& v) { c_[static_cast<std::size_t>(n)] = v; }
    void add_coeff(int n, const Rational& v) { c_[static_cast<std::size_t>(n)] += v; }

    bool is_zero() const
    {
        for (const auto& v : c_)
            if (!mes::is_zero(v)) return false;
        return true;
    }

    QSeries truncated(int order) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const Rational& s);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }

    bool operator==(const QSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

    static QSeries one(int order)
    {
        QSeries s(order);
        s.set_coeff(0, Rational(1));
        return s;
    }

private:
    int order_ = 0;
    std::vector<Rational> c_{Rational(0)};
};

// d = q d/dq.
QSeries q_derivative(const QSeries& s);

std::string to_string(const QSeries& s);

} // namespace mes
