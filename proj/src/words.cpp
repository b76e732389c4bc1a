#include "mes/words.hpp"

#include "mes/rational.hpp"

namespace mes {

static LinComb<BinaryWord> prepend(std::uint8_t letter, const LinComb<BinaryWord>& lc)
{
    LinComb<BinaryWord> out;
    for (const auto& [w, c] : lc.terms()) {
        BinaryWord v;
        v.reserve(w.size() + 1);
        v.push_back(letter);
        v.insert(v.end(), w.begin(), w.end());
        out.add(v, c);
    }
    return out;
}

static LinComb<BinaryWord> shuffle_span(const BinaryWord& w1, std::size_t i1,
                                        const BinaryWord& w2, std::size_t i2)
{
    if (i1 == w1.size())
        return LinComb<BinaryWord>::unit(BinaryWord(w2.begin() + i2, w2.end()));
    if (i2 == w2.size())
        return LinComb<BinaryWord>::unit(BinaryWord(w1.begin() + i1, w1.end()));
    LinComb<BinaryWord> out = prepend(w1[i1], shuffle_span(w1, i1 + 1, w2, i2));
    out += prepend(w2[i2], shuffle_span(w1, i1, w2, i2 + 1));
    return out;
}

LinComb<BinaryWord> shuffle(const BinaryWord& w1, const BinaryWord& w2)
{
    return shuffle_span(w1, 0, w2, 0);
}

LinComb<BinaryWord> shuffle(const LinComb<BinaryWord>& a, const LinComb<BinaryWord>& b)
{
    LinComb<BinaryWord> out;
    for (const auto& [w1, c1] : a.terms())
        for (const auto& [w2, c2] : b.terms()) {
            LinComb<BinaryWord> s = shuffle(w1, w2);
            s *= c1 * c2;
            out += s;
        }
    return out;
}

LinComb<Composition> shuffle_compositions(const Composition& c1, const Composition& c2)
{
    LinComb<Composition> out;
    const LinComb<BinaryWord> s = shuffle(composition_to_word(c1), composition_to_word(c2));
    for (const auto& [w, c] : s.terms()) out.add(word_to_composition(w), c);
    return out;
}

LinComb<Composition> shuffle_compositions(const LinComb<Composition>& a,
                                          const LinComb<Composition>& b)
{
    LinComb<Composition> out;
    for (const auto& [c1, x1] : a.terms())
        for (const auto& [c2, x2] : b.terms()) {
            LinComb<Composition> s = shuffle_compositions(c1, c2);
            s *= x1 * x2;
            out += s;
        }
    return out;
}

static LinComb<Composition> prepend(int part, const LinComb<Composition>& lc)
{
    LinComb<Composition> out;
    for (const auto& [c, x] : lc.terms()) {
        Composition v;
        v.parts.reserve(c.parts.size() + 1);
        v.parts.push_back(part);
        v.parts.insert(v.parts.end(), c.parts.begin(), c.parts.end());
        out.add(v, x);
    }
    return out;
}

static Composition tail_of(const Composition& c)
{
    return Composition(std::vector<int>(c.parts.begin() + 1, c.parts.end()));
}

LinComb<Composition> harmonic(const Composition& c1, const Composition& c2)
{
    if (c1.empty()) return LinComb<Composition>::unit(c2);
    if (c2.empty()) return LinComb<Composition>::unit(c1);
    const int n1 = c1.parts.front();
    const int n2 = c2.parts.front();
    const Composition t1 = tail_of(c1);
    const Composition t2 = tail_of(c2);
    LinComb<Composition> out = prepend(n1, harmonic(t1, c2));
    out += prepend(n2, harmonic(c1, t2));
    out += prepend(n1 + n2, harmonic(t1, t2));
    return out;
}

LinComb<Composition> harmonic(const LinComb<Composition>& a, const LinComb<Composition>& b)
{
    LinComb<Composition> out;
    for (const auto& [c1, x1] : a.terms())
        for (const auto& [c2, x2] : b.terms()) {
            LinComb<Composition> h = harmonic(c1, c2);
            h *= x1 * x2;
            out += h;
        }
    return out;
}

LinComb<Composition> hoffman_exp_terms(int r)
{
    if (r < 1) throw std::invalid_argument("hoffman_exp_terms: r must be >= 1");
    LinComb<Composition> out;
    for (const auto& c : compositions_of_weight(r)) {
        Integer den(1);
        for (int p : c.parts) den *= factorial(static_cast<unsigned long>(p));
        out.add(c, ratio(Integer(1), den));
    }
    return out;
}

} // namespace mes
