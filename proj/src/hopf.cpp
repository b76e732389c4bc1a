#include "mes/hopf.hpp"

#include "mes/runtime.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mes {

LinComb<Composition> reduce(const IntegralSymbol& s)
{
    if (s.word.empty()) return LinComb<Composition>::unit(Composition{});
    if (s.left == s.right) return {};

    BinaryWord w = s.word;
    int sign = 1;
    if (s.left == 1) { // flip to endpoints (0,1), sign (-1)^N
        std::reverse(w.begin(), w.end());
        if (w.size() % 2) sign = -sign;
    }

    std::size_t lead = 0;
    while (lead < w.size() && w[lead] == 0) ++lead;
    if (lead == w.size()) return {}; // all-zero word

    Composition m = word_to_composition(BinaryWord(w.begin() + lead, w.end()));
    if (lead == 0) {
        return LinComb<Composition>::unit(m, Rational(sign));
    }
    if (lead % 2) sign = -sign;

    // Distribute the leading zeros over the blocks: k_j = m_j + e_j,
    // sum e_j = lead, coefficient prod C(k_j-1, m_j-1).
    LinComb<Composition> out;
    const int r = m.depth();
    std::vector<int> extra(static_cast<std::size_t>(r), 0);
    auto emit = [&]() {
        Integer coeff(sign);
        Composition k = m;
        for (int j = 0; j < r; ++j) {
            k.parts[j] += extra[j];
            coeff *= binomial(k.parts[j] - 1, m.parts[j] - 1);
        }
        out.add(k, Rational(coeff));
    };
    // enumerate weak compositions of `lead` into r slots
    std::function<void(int, int)> rec = [&](int slot, int rest) {
        if (slot == r - 1) {
            extra[slot] = rest;
            emit();
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            extra[slot] = e;
            rec(slot + 1, rest - e);
        }
    };
    rec(0, static_cast<int>(lead));
    return out;
}

Rational b_coefficient(int n, int nprime, int k)
{
    if (n < 1 || nprime < 1 || k < 1)
        throw std::invalid_argument("b_coefficient: arguments must be >= 1");
    Integer v = binomial(k - 1, n - 1);
    if (n % 2) v = -v;
    Integer w = binomial(k - 1, nprime - 1);
    if ((k - nprime) % 2) w = -w;
    return Rational(v + w);
}

// One term of the subset sum defining the coproduct: the subset is given as a
// bitmask over the letter positions 1..N.  Returns false when the term dies
// in the quotient.
static bool phi_term(const BinaryWord& a, unsigned long mask, TensorLinComb& out)
{
    const int N = static_cast<int>(a.size());
    LinComb<Composition> left = LinComb<Composition>::unit(Composition{});
    BinaryWord marked;

    int prev_pos = 0;  // position, 1-based; 0 means the left endpoint
    int prev_letter = 0;
    auto close_segment = [&](int pos, int letter) -> bool {
        BinaryWord seg(a.begin() + prev_pos, a.begin() + (pos - 1));
        LinComb<Composition> red = reduce(IntegralSymbol{prev_letter, seg, letter});
        if (red.is_zero()) return false;
        left = shuffle_compositions(left, red);
        prev_pos = pos;
        prev_letter = letter;
        return true;
    };

    for (int p = 1; p <= N; ++p) {
        if (mask & (1ul << (p - 1))) {
            if (!close_segment(p, a[p - 1])) return false;
            marked.push_back(a[p - 1]);
        }
    }
    if (!close_segment(N + 1, 1)) return false;

    LinComb<Composition> right = reduce(IntegralSymbol{0, marked, 1});
    if (right.is_zero()) return false;

    for (const auto& [u, cu] : left.terms())
        for (const auto& [v, cv] : right.terms())
            out.add({u, v}, cu * cv);
    return true;
}

static TensorLinComb coproduct_range(const BinaryWord& a, unsigned long lo, unsigned long hi)
{
    TensorLinComb out;
    for (unsigned long mask = lo; mask < hi; ++mask) phi_term(a, mask, out);
    return out;
}

TensorLinComb coproduct_serial(const Composition& c)
{
    const BinaryWord a = composition_to_word(c);
    if (a.size() > 24) throw std::invalid_argument("coproduct: weight too large");
    return coproduct_range(a, 0, 1ul << a.size());
}

TensorLinComb coproduct(const Composition& c)
{
    const BinaryWord a = composition_to_word(c);
    if (a.size() > 24) throw std::invalid_argument("coproduct: weight too large");
    const unsigned long total = 1ul << a.size();
    const int nthreads = thread_count();
#ifdef _OPENMP
    if (nthreads > 1 && total >= 256) {
        TensorLinComb out;
#pragma omp parallel num_threads(nthreads)
        {
            const int tid = omp_get_thread_num();
            const int nt = omp_get_num_threads();
            const unsigned long chunk = (total + nt - 1) / nt;
            const unsigned long lo = chunk * static_cast<unsigned long>(tid);
            const unsigned long hi = std::min(total, lo + chunk);
            TensorLinComb local = lo < hi ? coproduct_range(a, lo, hi) : TensorLinComb{};
#pragma omp critical
            out += local;
        }
        return out;
    }
#else
    (void)nthreads;
#endif
    return coproduct_range(a, 0, total);
}

TensorLinComb coproduct(const LinComb<Composition>& lc)
{
    TensorLinComb out;
    for (const auto& [c, x] : lc.terms()) {
        TensorLinComb d = coproduct(c);
        d *= x;
        out += d;
    }
    return out;
}

TensorLinComb tensor_mul(const TensorLinComb& a, const TensorLinComb& b)
{
    TensorLinComb out;
    for (const auto& [p1, c1] : a.terms())
        for (const auto& [p2, c2] : b.terms()) {
            LinComb<Composition> l = shuffle_compositions(p1.first, p2.first);
            LinComb<Composition> r = shuffle_compositions(p1.second, p2.second);
            const Rational f = c1 * c2;
            for (const auto& [u, cu] : l.terms())
                for (const auto& [v, cv] : r.terms())
                    out.add({u, v}, f * cu * cv);
        }
    return out;
}

TensorLinComb psi_enumerative(const Composition& c, const XYWord& w)
{
    if (static_cast<int>(w.size()) != c.depth())
        throw std::invalid_argument("psi: marker word length must equal the depth");
    const BinaryWord a = composition_to_word(c);
    const int N = static_cast<int>(a.size());

    // positions of the letters 1: 1, n1+1, n1+n2+1, ...
    std::vector<int> ones;
    int pos = 1;
    for (int p : c.parts) {
        ones.push_back(pos);
        pos += p;
    }
    unsigned long jmask = 0;
    for (int t : y_positions(w)) jmask |= 1ul << (ones[static_cast<std::size_t>(t) - 1] - 1);
    unsigned long zmask = 0;
    for (int p = 1; p <= N; ++p)
        if (a[p - 1] == 0) zmask |= 1ul << (p - 1);

    TensorLinComb out;
    // all subsets whose 1-positions are exactly jmask
    unsigned long sub = zmask;
    while (true) {
        phi_term(a, sub | jmask, out);
        if (sub == 0) break;
        sub = (sub - 1) & zmask;
    }
    return out;
}

void enumerate_marker_terms(const Composition& c, const std::vector<int>& t_set, int k_min,
                            const MarkerTermFn& fn)
{
    const int r = c.depth();
    const int h = static_cast<int>(t_set.size());
    if (h == 0) return;
    std::vector<int> t = t_set; // 1-based, increasing
    t.push_back(r + 1);

    const int t1 = t[0];
    const int nk = r - t1 + 1; // number of k indices, j = t1..r

    // block sums N_{t_m}
    std::vector<int> block_sum(static_cast<std::size_t>(h), 0);
    for (int m = 0; m < h; ++m)
        for (int j = t[m]; j < t[m + 1]; ++j) block_sum[m] += c.parts[j - 1];

    std::vector<int> q(static_cast<std::size_t>(h));
    std::vector<int> k(static_cast<std::size_t>(nk));

    std::function<void()> emit = [&]() {
        // sign exponent: sum_m (N_{t_m} + n_{q_m} + k_{q_m+1} + ... up to the
        // end of block m)
        long expo = 0;
        for (int m = 0; m < h; ++m) {
            expo += block_sum[m] + c.parts[q[m] - 1];
            for (int j = q[m] + 1; j < t[m + 1]; ++j) expo += k[j - t1];
        }
        Integer coeff((expo % 2) ? -1 : 1);
        for (int j = t1; j <= r; ++j) {
            bool is_q = false;
            for (int m = 0; m < h; ++m) is_q = is_q || (q[m] == j);
            if (is_q) continue;
            coeff *= binomial(k[j - t1] - 1, c.parts[j - 1] - 1);
            if (coeff == 0) return;
        }

        std::vector<Composition> factors;
        for (int m = 0; m < h; ++m) {
            Composition dec; // k_{q_m-1},...,k_{t_m}
            for (int j = q[m] - 1; j >= t[m]; --j) dec.parts.push_back(k[j - t1]);
            if (!dec.empty()) factors.push_back(dec);
            Composition inc; // k_{q_m+1},...,k_{t_{m+1}-1}
            for (int j = q[m] + 1; j < t[m + 1]; ++j) inc.parts.push_back(k[j - t1]);
            if (!inc.empty()) factors.push_back(inc);
        }
        Composition right;
        for (int m = 0; m < h; ++m) right.parts.push_back(k[q[m] - t1]);
        fn(coeff, factors, right);
    };

    std::function<void(int)> fill_k = [&](int m) {
        if (m == h) {
            emit();
            return;
        }
        const int lo = t[m] - t1;
        const int hi = t[m + 1] - 1 - t1; // inclusive
        const int len = hi - lo + 1;
        std::function<void(int, int)> rec = [&](int idx, int rest) {
            if (idx == len - 1) {
                if (rest >= k_min) {
                    k[lo + idx] = rest;
                    fill_k(m + 1);
                }
                return;
            }
            for (int v = k_min; v <= rest - k_min * (len - 1 - idx); ++v) {
                k[lo + idx] = v;
                rec(idx + 1, rest - v);
            }
        };
        rec(0, block_sum[m]);
    };

    std::function<void(int)> fill_q = [&](int m) {
        if (m == h) {
            fill_k(0);
            return;
        }
        for (int v = t[m]; v < t[m + 1]; ++v) {
            q[m] = v;
            fill_q(m + 1);
        }
    };
    fill_q(0);
}

TensorLinComb psi(const Composition& c, const XYWord& w)
{
    if (static_cast<int>(w.size()) != c.depth())
        throw std::invalid_argument("psi: marker word length must equal the depth");
    if (!c.all_parts_at_least(2))
        throw std::invalid_argument("psi: closed form requires all parts >= 2");

    const std::vector<int> t = y_positions(w);
    if (t.empty()) return TensorLinComb::unit({c, Composition{}});

    Composition prefix;
    prefix.parts.assign(c.parts.begin(), c.parts.begin() + (t.front() - 1));

    TensorLinComb out;
    enumerate_marker_terms(c, t, 1,
                           [&](const Integer& coeff, const std::vector<Composition>& factors,
                               const Composition& right) {
                               LinComb<Composition> left = LinComb<Composition>::unit(prefix);
                               for (const auto& f : factors)
                                   left = shuffle_compositions(left,
                                                               LinComb<Composition>::unit(f));
                               const Rational fac(coeff);
                               for (const auto& [u, cu] : left.terms())
                                   out.add({u, right}, fac * cu);
                           });
    return out;
}

} // namespace mes
