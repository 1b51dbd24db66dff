#include "carlitz/factor.hpp"

#include <algorithm>
#include <random>

namespace carlitz {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Poly Factorization::expand() const {
    Poly r = Poly::constant(unit.field(), unit.value());
    for (const auto& [prime, e] : factors) r *= pow(prime, e);
    return r;
}

std::uint32_t Factorization::total_multiplicity() const noexcept {
    std::uint32_t n = 0;
    for (const auto& f : factors) n += f.exponent;
    return n;
}

namespace {

// Iterates h -> h^q mod m. A precomputed matrix pays off once q is large
// enough that spreading and reducing costs more than a matrix-vector product.
class FrobeniusStepper {
public:
    explicit FrobeniusStepper(const Poly& m) : mod_(m) {
        if (m.gf().q() > 4 && m.length() > 2) map_.emplace(m);
    }
    Poly step(const Poly& h) const { return map_ ? map_->apply(h) : frobenius_mod(h, mod_); }

private:
    Poly mod_;
    std::optional<FrobeniusMap> map_;
};

std::vector<std::pair<Poly, std::uint32_t>> squarefree_parts(const Poly& f) {
    std::vector<std::pair<Poly, std::uint32_t>> out;
    if (f.is_constant()) return out;
    const std::uint32_t p = f.gf().p();
    const Poly one = Poly::one(f.field());
    const Poly df = derivative(f);
    if (df.is_zero()) {
        for (auto& [h, m] : squarefree_parts(pth_root(f))) out.emplace_back(std::move(h), m * p);
        return out;
    }
    Poly c = gcd(f, df);
    Poly w = f / c;
    std::uint32_t i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_one()) out.emplace_back(std::move(z), i);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one())
        for (auto& [h, m] : squarefree_parts(pth_root(c))) out.emplace_back(std::move(h), m * p);
    return out;
}

// Splits a squarefree monic f into products of irreducibles sharing a degree.
std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, std::size_t>> out;
    const Poly t = Poly::t(f.field());
    Poly h = t % f;
    for (std::size_t i = 1; f.length() - 1 >= 2 * i; ++i) {
        h = frobenius_mod(h, f);
        Poly g = gcd(f, h - t);
        if (!g.is_one()) {
            f = f / g;
            h = h % f;
            out.emplace_back(std::move(g), i);
        }
    }
    if (!f.is_constant()) {
        const std::size_t d = f.length() - 1;
        out.emplace_back(std::move(f), d);
    }
    return out;
}

// Cantor-Zassenhaus; f is monic squarefree with all factors of degree d.
void equal_degree(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const std::size_t n = f.length() - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    const auto& F = f.gf();
    std::uniform_int_distribution<Elem> coeff(0, F.q() - 1);
    BigInt half;
    if (F.p() != 2) {
        mpz_ui_pow_ui(half.get_mpz_t(), F.q(), d);
        half = (half - 1) / 2;
    }
    const Poly one = Poly::one(f.field());
    while (true) {
        std::vector<Elem> c(n);
        for (auto& x : c) x = coeff(rng);
        Poly a(f.field(), std::move(c));
        if (a.is_constant()) continue;
        Poly b(f.field());
        if (F.p() != 2) {
            b = powmod(a, half, f) - one;
        } else {
            // Absolute trace from GF(q^d) down to GF(2).
            Poly term = a;
            b = a;
            for (std::size_t k = 1; k < F.s() * d; ++k) {
                term = mulmod(term, term, f);
                b += term;
            }
        }
        if (b.is_zero()) continue;
        Poly g = gcd(f, b);
        if (g.is_one() || g.length() == f.length()) continue;
        equal_degree(g, d, rng, out);
        equal_degree(f / g, d, rng, out);
        return;
    }
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.is_constant()) throw Error(ErrorCode::ConstantInput, "irreducibility of a constant");
    const Poly g = f.monic();
    const std::size_t n = g.length() - 1;
    if (n == 1) return true;

    const auto ells = prime_factors_u64(n);
    std::vector<std::size_t> checkpoints;
    for (auto l : ells) checkpoints.push_back(n / l);
    std::sort(checkpoints.begin(), checkpoints.end());

    const Poly t = Poly::t(g.field());
    const FrobeniusStepper frob(g);
    Poly h = t;
    std::size_t next = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        h = frob.step(h);
        while (next < checkpoints.size() && checkpoints[next] == i) {
            if (!gcd(h - t, g).is_one()) return false;
            ++next;
        }
    }
    return h == t;
}

bool is_monic_prime(const Poly& f) { return !f.is_constant() && f.is_monic() && is_irreducible(f); }

void require_monic_prime(const Poly& f) {
    if (!is_monic_prime(f)) throw Error(ErrorCode::NotMonicPrime, to_string(f) + " is not a monic prime");
}

Factorization factorize(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot factor zero");
    Factorization result{FieldElem(f.field(), f.leading()), {}};
    const Poly g = f.monic();
    std::mt19937_64 rng(seed);
    for (auto& [part, mult] : squarefree_parts(g)) {
        for (auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> primes;
            equal_degree(block, d, rng, primes);
            for (auto& pr : primes) result.factors.push_back({std::move(pr), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return enumeration_order(a.prime, b.prime) < 0; });
    // Squarefree parts are pairwise coprime, so this is normally a no-op.
    std::vector<PrimePower> merged;
    for (auto& pp : result.factors) {
        if (!merged.empty() && merged.back().prime == pp.prime)
            merged.back().exponent += pp.exponent;
        else
            merged.push_back(std::move(pp));
    }
    result.factors = std::move(merged);
    return result;
}

std::vector<Poly> monic_primes(const FieldPtr& field, std::size_t d) {
    std::vector<Poly> out;
    for (auto& f : enumerate_monic(field, d))
        if (is_irreducible(f)) out.push_back(std::move(f));
    return out;
}

std::vector<std::pair<Poly, Poly>> twin_prime_pairs(const FieldPtr& field, std::size_t d) {
    if (d < 1) throw Error(ErrorCode::DegreeTooSmall, "twin primes need degree >= 1");
    std::vector<std::pair<Poly, Poly>> out;
    const Poly one = Poly::one(field);
    for (auto& f : enumerate_monic(field, d)) {
        if (!is_irreducible(f)) continue;
        Poly g = f + one;
        if (is_irreducible(g)) out.emplace_back(std::move(f), std::move(g));
    }
    return out;
}

}  // namespace carlitz
