#include "fano/schubert.hpp"

#include <vector>

namespace fano {

ChowClass ChowClass::unit(int N) { return basis(N, 0, 0); }

ChowClass ChowClass::basis(int N, int a, int b, Int c) {
    if (N < 2) throw DomainError("ChowClass: need N >= 2");
    if (!(a >= b && b >= 0 && a <= N - 2)) throw DomainError("ChowClass: partition out of box");
    ChowClass out;
    out.N = N;
    if (c != 0) out.coeffs.emplace(Partition2{a, b}, std::move(c));
    return out;
}

namespace {

void add_into(ChowClass& acc, int a, int b, const Int& c) {
    if (a > acc.N - 2 || b > a) return;  // outside the box
    auto [it, fresh] = acc.coeffs.try_emplace(Partition2{a, b}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) acc.coeffs.erase(it);
    }
}

}  // namespace

ChowClass pieri_sigma1(const ChowClass& c) {
    ChowClass out;
    out.N = c.N;
    for (const auto& [p, v] : c.coeffs) {
        add_into(out, p.a + 1, p.b, v);
        add_into(out, p.a, p.b + 1, v);
    }
    return out;
}

ChowClass mul_sigma11(const ChowClass& c) {
    ChowClass out;
    out.N = c.N;
    for (const auto& [p, v] : c.coeffs) add_into(out, p.a + 1, p.b + 1, v);
    return out;
}

Int integrate(const ChowClass& c) {
    auto it = c.coeffs.find(Partition2{c.N - 2, c.N - 2});
    return it == c.coeffs.end() ? Int(0) : it->second;
}

SymPoly2 chern_top_sym(int n) {
    if (n < 1) throw DomainError("chern_top_sym: need n >= 1");
    // Work in the basis {1, x1} over Z[e1, e2], eliminating x2 = e1 - x1 and
    // reducing x1^2 = e1*x1 - e2.  The factor i*x1 + (n-i)*x2 becomes
    // (n-i)*e1 + (2i-n)*x1.
    using Layer = std::map<std::pair<int, int>, Int>;
    Layer part0{{{0, 0}, 1}}, part1;  // constant and x1 components
    for (int i = 0; i <= n; ++i) {
        Int c0 = n - i;  // times e1
        Int c1 = 2 * i - n;
        Layer next0, next1;
        auto add = [](Layer& layer, std::pair<int, int> key, const Int& v) {
            if (v == 0) return;
            auto [it, fresh] = layer.try_emplace(key, v);
            if (!fresh) {
                it->second += v;
                if (it->second == 0) layer.erase(it);
            }
        };
        for (const auto& [key, v] : part0) {
            add(next0, {key.first + 1, key.second}, v * c0);
            add(next1, key, v * c1);
        }
        for (const auto& [key, v] : part1) {
            // x1 * (c0*e1 + c1*x1) = c0*e1*x1 + c1*(e1*x1 - e2)
            add(next1, {key.first + 1, key.second}, v * (c0 + c1));
            add(next0, {key.first, key.second + 1}, -v * c1);
        }
        part0 = std::move(next0);
        part1 = std::move(next1);
    }
    if (!part1.empty())
        throw InvariantError("chern_top_sym: product is not symmetric in the Chern roots");
    SymPoly2 out;
    out.terms = std::move(part0);
    return out;
}

Int f1_degree(int n) {
    if (n < 2) throw DomainError("f1_degree: need n >= 2");
    const int N = n * n;
    // Evaluate the Chern polynomial at e1 -> sigma_1, e2 -> sigma_{1,1}
    // (multiplications commute), then cap with powers of sigma_1.
    ChowClass total;
    total.N = N;
    for (const auto& [key, c] : chern_top_sym(n).terms) {
        ChowClass term = ChowClass::basis(N, 0, 0, c);
        for (int i = 0; i < key.first; ++i) term = pieri_sigma1(term);
        for (int j = 0; j < key.second; ++j) term = mul_sigma11(term);
        for (const auto& [p, v] : term.coeffs) add_into(total, p.a, p.b, v);
    }
    long power = 2L * n * n - n - 5;
    for (long i = 0; i < power; ++i) total = pieri_sigma1(total);
    return integrate(total);
}

Int gr_degree(int a, int b) {
    if (a < 0 || a > b) throw DomainError("gr_degree: need 0 <= a <= b");
    Int num = factorial(long(a) * (b - a));
    Int den = 1;
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= b; ++j) den *= j - i;
    if (num % den != 0) throw InvariantError("gr_degree: factorial quotient is not integral");
    return num / den;
}

Int compression_degree(int m, int n, int r, int s) {
    if (!(1 < r && r <= m && m <= n)) throw DomainError("compression_degree: need 1 < r <= m <= n");
    if (s < 0 || s > r - 1) throw DomainError("compression_degree: need 0 <= s <= r-1");
    long t = s + 1 + n - r;
    long delta = t * (r - s - 1) + long(s) * (m - s);
    Int d1 = gr_degree(r - s - 1, n);  // = deg Gr(t, n) by duality
    Int d2 = gr_degree(s, m);
    return binomial(delta, long(s) * (m - s)) * d1 * ipow(m - s, t * (r - s - 1)) * d2 *
           ipow(t, long(s) * (m - s));
}

}  // namespace fano
