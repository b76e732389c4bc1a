#include "mes/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace mes {

QSeries QSeries::truncated(int order) const
{
    QSeries out(std::min(order, order_));
    for (int n = 0; n <= out.order(); ++n) out.set_coeff(n, coeff(n));
    return out;
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int n = 0; n <= order_; ++n) c_[static_cast<std::size_t>(n)] += o.coeff(n);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o)
{
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int n = 0; n <= order_; ++n) c_[static_cast<std::size_t>(n)] -= o.coeff(n);
    return *this;
}

QSeries& QSeries::operator*=(const Rational& s)
{
    for (auto& v : c_) v *= s;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
        if (is_zero(a.coeff(i))) continue;
        for (int j = 0; i + j <= out.order(); ++j) {
            if (is_zero(b.coeff(j))) continue;
            out.add_coeff(i + j, a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

QSeries q_derivative(const QSeries& s)
{
    QSeries out(s.order());
    for (int n = 1; n <= s.order(); ++n) out.set_coeff(n, Rational(n) * s.coeff(n));
    return out;
}

std::string to_string(const QSeries& s)
{
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= s.order(); ++n) {
        if (is_zero(s.coeff(n))) continue;
        if (!first) os << " + ";
        os << to_string(s.coeff(n)) << "*q^" << n;
        first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << s.order() + 1 << ")";
    return os.str();
}

} // namespace mes
