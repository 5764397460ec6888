#include "pariah/quadforms.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace pariah::quadforms {

namespace {

void check_discriminant(long D) {
    if (D >= 0 || mod_floor(D, 4) > 1)
        throw NotADiscriminant("D = " + std::to_string(D) + " is not a negative discriminant");
}

// floor division for Int
Int fdiv(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

bool QuadForm::operator<(const QuadForm& o) const {
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
}

bool is_reduced(const QuadForm& q) {
    Int ab = abs(q.b);
    if (!(ab <= q.a && q.a <= q.c)) return false;
    if (q.b < 0 && (q.a == ab || q.a == q.c)) return false;
    return true;
}

QuadForm apply_sl2(const QuadForm& q, const Int& a, const Int& b, const Int& c, const Int& d) {
    if (a * d - b * c != 1) throw NotUnimodular("determinant of the acting matrix is not 1");
    QuadForm r;
    r.a = q.eval(a, c);
    r.b = 2 * q.a * a * b + q.b * (a * d + b * c) + 2 * q.c * c * d;
    r.c = q.eval(b, d);
    return r;
}

QuadForm reduce(QuadForm q) {
    if (!q.positive_definite()) throw NotPositiveDefinite("reduce requires A > 0 and disc < 0");
    Int D = q.disc();
    for (;;) {
        // normalize B into (-A, A]
        Int t = fdiv(q.b + q.a, 2 * q.a);
        q.b -= 2 * q.a * t;
        if (q.b == -q.a) q.b = q.a;
        q.c = (q.b * q.b - D) / (4 * q.a);
        if (q.a > q.c) {
            q = QuadForm{q.c, -q.b, q.a};
            continue;
        }
        if (q.b < 0 && (q.a == -q.b || q.a == q.c)) q.b = -q.b;
        return q;
    }
}

ClassList enumerate_reduced(long D) {
    check_discriminant(D);
    ClassList out;
    out.D = D;
    for (long A = 1; 3 * A * A <= -D; ++A) {
        for (long B = -A + 1; B <= A; ++B) {
            if (mod_floor(B * B - D, 4 * A) != 0) continue;
            long C = (B * B - D) / (4 * A);
            QuadForm q{A, B, C};
            if (!is_reduced(q)) continue;
            out.reps.push_back(q);
            if (q.a == q.b && q.b == q.c)
                out.weights.emplace_back(1, 3);
            else if (q.b == 0 && q.a == q.c)
                out.weights.emplace_back(1, 2);
            else
                out.weights.emplace_back(1);
        }
    }
    return out;
}

long class_number(long D) { return static_cast<long>(enumerate_reduced(D).reps.size()); }

Rat hurwitz_number(long D) {
    ClassList cl = enumerate_reduced(D);
    Rat h(0);
    for (const Rat& w : cl.weights) h += w;
    return h;
}

bool is_fundamental(long D) {
    if (D == 0) throw Error("is_fundamental: D must be nonzero");
    auto squarefree = [](long n) {
        n = std::abs(n);
        for (long p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) return false;
        return true;
    };
    long r = mod_floor(D, 4);
    if (r == 1) return squarefree(D);
    if (r == 0) {
        long d = D / 4;
        long rd = mod_floor(d, 4);
        return (rd == 2 || rd == 3) && squarefree(d);
    }
    return false;
}

CMPoint tau_of(const QuadForm& q) {
    if (!q.positive_definite()) throw NotPositiveDefinite("tau_of requires a positive-definite form");
    return CMPoint{q.a, q.b, static_cast<long>(q.disc().get_si())};
}

namespace {

// complete a coprime column (p, q) to a unimodular matrix [[p, u], [q, v]]
std::pair<Int, Int> complete_column(const Int& p, const Int& q) {
    Int g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw Error("complete_column: column not coprime");
    // p x + q y = 1  ->  p v - q u = 1 with v = x, u = -y
    return {-y, x};
}

}  // namespace

LevelClassList level_reps(long N, long D) {
    check_discriminant(D);
    if (N <= 0) throw Error("level_reps: N must be positive");
    LevelClassList out;
    out.N = N;
    out.D = D;
    std::vector<long> residues;
    for (long r = -N + 1; r <= N; ++r)
        if (mod_floor(r * r - D, 4 * N) == 0) residues.push_back(r);
    out.square_root_exists = !residues.empty();
    if (!out.square_root_exists) return out;

    ClassList classes = enumerate_reduced(D);
    for (size_t ci = 0; ci < classes.reps.size(); ++ci) {
        const QuadForm& q0 = classes.reps[ci];
        // candidate first columns ordered by the represented value Q0(p, q):
        // the smaller it is, the higher Im(tau) of the resulting representative
        std::vector<std::tuple<Int, long, long>> cand;
        const long bound = 12;
        for (long p = -bound; p <= bound; ++p)
            for (long qq = -bound; qq <= bound; ++qq) {
                if (std::gcd(p, qq) != 1) continue;
                cand.emplace_back(q0.eval(p, qq), p, qq);
            }
        std::sort(cand.begin(), cand.end());
        for (long r : residues) {
            bool found = false;
            for (const auto& [val, p, qq] : cand) {
                auto [u, v] = complete_column(p, qq);
                for (long ta = 0; ta <= 4 * N && !found; ++ta) {
                    for (long t : {ta, -ta}) {
                        QuadForm g = apply_sl2(q0, p, u + t * p, qq, v + t * qq);
                        if (!mpz_divisible_ui_p(Int(g.b - r).get_mpz_t(), 2 * N)) continue;
                        if (!mpz_divisible_ui_p(g.c.get_mpz_t(), N)) continue;
                        out.reps.push_back(LevelRep{QuadForm{g.a * N, g.b, g.c / N},
                                                    classes.weights[ci], q0, r});
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found)
                throw Error("level_reps: no representative found for class (" +
                            q0.a.get_str() + "," + q0.b.get_str() + "," + q0.c.get_str() +
                            ") at residue " + std::to_string(r));
        }
    }
    return out;
}

Rat trace_one(long N, long D) {
    LevelClassList lr = level_reps(N, D);
    if (!lr.square_root_exists) return Rat(0);
    Rat s(0);
    for (const LevelRep& rep : lr.reps) s += rep.weight;
    return s;
}

int genus_char(const QuadForm& q, long D0) {
    Int D = q.disc();
    if (!is_fundamental(D0)) throw Error("genus_char: D0 must be fundamental");
    if (D % D0 != 0) throw Error("genus_char: D0 must divide disc(Q)");
    Int D1 = D / D0;
    long rm = mod_floor(static_cast<long>(D1.get_si() % 4), 4);
    if (rm > 1) throw Error("genus_char: disc(Q)/D0 is not a discriminant");

    int found = 0, chi = 0;
    Int first_value;
    for (long radius = 0; radius <= 100 && found < 2; ++radius) {
        for (long x = -radius; x <= radius && found < 2; ++x) {
            for (long y : {radius - std::abs(x), -(radius - std::abs(x))}) {
                if (std::abs(x) > 50 || std::abs(y) > 50) continue;
                Int n = q.eval(x, y);
                if (n == 0) continue;
                if (gcd(n, Int(D0)) != 1) continue;
                int k = kronecker(Int(D0), n);
                if (found == 0) {
                    chi = k;
                    first_value = n;
                    found = 1;
                } else if (n != first_value) {
                    if (k != chi)
                        throw Error("genus_char: character not constant on represented values");
                    found = 2;
                }
                if (y == 0) break;  // avoid testing (x, 0) twice
            }
        }
    }
    if (found == 0)
        throw NoCoprimeRepresentation("no represented value coprime to D0 within the search bound");
    return chi;
}

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

}  // namespace pariah::quadforms
