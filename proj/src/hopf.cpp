#include "pha/hopf.hpp"

#include <sstream>

namespace pha {

CycRat FiniteHopf::lambda() const {
    if (kind != HopfKind::Taft) throw pha_error("not a Taft algebra");
    return CycRat::zeta(field).pow(field->n / taft_n);
}

std::vector<CycRat> FiniteHopf::dense(const SparseVec& v) const {
    std::vector<CycRat> out(dim(), CycRat::zero(field));
    for (const auto& [i, c] : v) out[i] = out[i] + c;
    return out;
}

std::vector<CycRat> FiniteHopf::basis_elem(int i) const {
    std::vector<CycRat> out(dim(), CycRat::zero(field));
    out[i] = CycRat::one(field);
    return out;
}

std::vector<CycRat> FiniteHopf::multiply(const std::vector<CycRat>& a,
                                         const std::vector<CycRat>& b) const {
    std::vector<CycRat> out(dim(), CycRat::zero(field));
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            CycRat f = a[i] * b[j];
            for (const auto& [k, c] : mult[i][j]) out[k] = out[k] + f * c;
        }
    }
    return out;
}

namespace {

// Element of H tensor H, used to build Taft comultiplication by powering.
using Tensor2 = std::map<std::pair<int, int>, CycRat>;

Tensor2 t2_mul(const FiniteHopf& H, const Tensor2& a, const Tensor2& b) {
    Tensor2 out;
    for (const auto& [p1, c1] : a)
        for (const auto& [p2, c2] : b) {
            CycRat f = c1 * c2;
            for (const auto& [k1, d1] : H.mult[p1.first][p2.first])
                for (const auto& [k2, d2] : H.mult[p1.second][p2.second]) {
                    CycRat v = f * d1 * d2;
                    if (v.is_zero()) continue;
                    auto key = std::make_pair(k1, k2);
                    auto it = out.find(key);
                    if (it == out.end())
                        out.emplace(key, v);
                    else {
                        it->second = it->second + v;
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
        }
    return out;
}

} // namespace

FiniteHopf make_taft(unsigned n, FieldPtr field) {
    if (n < 2) throw pha_error("Taft algebra requires n >= 2");
    if (field->n % n != 0)
        throw pha_error("field lacks a primitive root of unity of order " + std::to_string(n));
    FiniteHopf H;
    H.field = field;
    H.kind = HopfKind::Taft;
    H.taft_n = n;
    size_t d = (size_t)n * n;
    CycRat lam = CycRat::zeta(field).pow(field->n / n);
    CycRat lam_inv = lam.inverse();

    auto id = [n](unsigned a, unsigned b) { return (int)(a * n + b); };
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            std::ostringstream name;
            if (a == 0 && b == 0)
                name << "1";
            else {
                if (a > 0) {
                    name << "g";
                    if (a > 1) name << "^" << a;
                }
                if (b > 0) {
                    if (a > 0) name << "*";
                    name << "x";
                    if (b > 1) name << "^" << b;
                }
            }
            H.basis.push_back(name.str());
        }

    // (g^a x^b)(g^c x^d) = lambda^{-bc} g^{a+c} x^{b+d}, zero past x^n
    H.mult.assign(d, std::vector<SparseVec>(d));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                for (unsigned e = 0; e < n; ++e) {
                    if (b + e >= n) continue;
                    CycRat coef = lam_inv.pow((long)b * c);
                    H.mult[id(a, b)][id(c, e)].push_back({id((a + c) % n, b + e), coef});
                }
    H.unit = {{id(0, 0), CycRat::one(field)}};

    // Delta by powering Delta(g), Delta(x) in the tensor square
    Tensor2 dg{{{id(1, 0), id(1, 0)}, CycRat::one(field)}};
    Tensor2 dx{{{id(1, 0), id(0, 1)}, CycRat::one(field)},
               {{id(0, 1), id(0, 0)}, CycRat::one(field)}};
    H.comult.assign(d, {});
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            Tensor2 acc{{{id(0, 0), id(0, 0)}, CycRat::one(field)}};
            for (unsigned i = 0; i < a; ++i) acc = t2_mul(H, acc, dg);
            for (unsigned i = 0; i < b; ++i) acc = t2_mul(H, acc, dx);
            for (const auto& [p, c] : acc)
                H.comult[id(a, b)].push_back({p.first, p.second, c});
        }

    H.counit.assign(d, CycRat::zero(field));
    for (unsigned a = 0; a < n; ++a) H.counit[id(a, 0)] = CycRat::one(field);

    // S(g^a x^b) = S(x)^b S(g^a), S(g) = g^{n-1}, S(x) = -g^{n-1} x
    H.antipode.assign(d, {});
    std::vector<CycRat> sx(d, CycRat::zero(field));
    sx[id(n - 1, 1)] = -CycRat::one(field);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            std::vector<CycRat> acc = H.basis_elem(id(0, 0));
            for (unsigned i = 0; i < b; ++i) acc = H.multiply(acc, sx);
            acc = H.multiply(acc, H.basis_elem(id((n - a) % n, 0)));
            SparseVec out;
            for (size_t k = 0; k < d; ++k)
                if (!acc[k].is_zero()) out.push_back({(int)k, acc[k]});
            H.antipode[id(a, b)] = out;
        }

    H.gen_names = {"g", "x"};
    H.gen_basis_index = {id(1, 0), id(0, 1)};
    H.words.assign(d, {});
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            std::vector<int> w;
            for (unsigned i = 0; i < a; ++i) w.push_back(0);
            for (unsigned i = 0; i < b; ++i) w.push_back(1);
            H.words[id(a, b)] = w;
        }
    return H;
}

FiniteHopf make_group_algebra(const std::vector<unsigned>& orders, FieldPtr field) {
    if (orders.empty()) throw pha_error("group algebra needs at least one factor");
    for (unsigned o : orders)
        if (o == 0) throw pha_error("zero order in group algebra");
    FiniteHopf H;
    H.field = field;
    H.kind = HopfKind::Group;
    size_t k = orders.size();
    size_t d = 1;
    for (unsigned o : orders) d *= o;

    auto index = [&](const std::vector<unsigned>& t) {
        size_t idx = 0;
        for (size_t i = 0; i < k; ++i) idx = idx * orders[i] + t[i];
        return (int)idx;
    };
    auto tuple_of = [&](size_t idx) {
        std::vector<unsigned> t(k);
        for (size_t i = k; i-- > 0;) {
            t[i] = idx % orders[i];
            idx /= orders[i];
        }
        return t;
    };

    for (size_t i = 0; i < d; ++i) {
        auto t = tuple_of(i);
        std::ostringstream name;
        bool wrote = false;
        for (size_t j = 0; j < k; ++j) {
            if (t[j] == 0) continue;
            if (wrote) name << "*";
            wrote = true;
            name << "g" << (j + 1);
            if (t[j] > 1) name << "^" << t[j];
        }
        H.basis.push_back(wrote ? name.str() : "1");
    }

    H.mult.assign(d, std::vector<SparseVec>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            auto a = tuple_of(i), b = tuple_of(j);
            std::vector<unsigned> s(k);
            for (size_t m = 0; m < k; ++m) s[m] = (a[m] + b[m]) % orders[m];
            H.mult[i][j].push_back({index(s), CycRat::one(field)});
        }
    H.unit = {{0, CycRat::one(field)}};
    H.comult.assign(d, {});
    for (size_t i = 0; i < d; ++i)
        H.comult[i].push_back({(int)i, (int)i, CycRat::one(field)});
    H.counit.assign(d, CycRat::one(field));
    H.antipode.assign(d, {});
    for (size_t i = 0; i < d; ++i) {
        auto t = tuple_of(i);
        std::vector<unsigned> inv(k);
        for (size_t m = 0; m < k; ++m) inv[m] = (orders[m] - t[m]) % orders[m];
        H.antipode[i].push_back({index(inv), CycRat::one(field)});
    }

    for (size_t j = 0; j < k; ++j) {
        H.gen_names.push_back("g" + std::to_string(j + 1));
        std::vector<unsigned> t(k, 0);
        t[j] = orders[j] > 1 ? 1 : 0;
        H.gen_basis_index.push_back(index(t));
    }
    H.words.assign(d, {});
    for (size_t i = 0; i < d; ++i) {
        auto t = tuple_of(i);
        std::vector<int> w;
        for (size_t j = 0; j < k; ++j)
            for (unsigned r = 0; r < t[j]; ++r) w.push_back((int)j);
        H.words[i] = w;
    }
    return H;
}

namespace {

bool dense_eq(const std::vector<CycRat>& a, const std::vector<CycRat>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

} // namespace

TensorElement sweedler_expand(const FiniteHopf& H, const std::vector<CycRat>& h, int k) {
    if (k < 1) throw pha_error("sweedler_expand needs k >= 1");
    TensorElement t;
    t.legs = 1;
    for (size_t i = 0; i < H.dim(); ++i)
        if (!h[i].is_zero()) t.terms[{(int)i}] = h[i];
    while (t.legs < k) {
        TensorElement next;
        next.legs = t.legs + 1;
        for (const auto& [key, c] : t.terms) {
            int last = key.back();
            for (const auto& [j, l, s] : H.comult[last]) {
                std::vector<int> nk(key.begin(), key.end() - 1);
                nk.push_back(j);
                nk.push_back(l);
                CycRat v = c * s;
                auto it = next.terms.find(nk);
                if (it == next.terms.end())
                    next.terms.emplace(nk, v);
                else {
                    it->second = it->second + v;
                    if (it->second.is_zero()) next.terms.erase(it);
                }
            }
        }
        t = std::move(next);
    }
    return t;
}

HopfReport verify_hopf_axioms(const FiniteHopf& H) {
    HopfReport rep;
    size_t d = H.dim();
    auto fail = [&](const std::string& msg) {
        if (rep.ok) {
            rep.ok = false;
            rep.first_failure = msg;
        }
    };

    // associativity and unit
    for (size_t i = 0; i < d && rep.ok; ++i) {
        auto ei = H.basis_elem(i);
        if (!dense_eq(H.multiply(H.dense(H.unit), ei), ei) ||
            !dense_eq(H.multiply(ei, H.dense(H.unit)), ei))
            fail("unit axiom fails on " + H.basis[i]);
    }
    // associativity, sparsely: both sides accumulated through the mult table
    for (size_t i = 0; i < d && rep.ok; ++i)
        for (size_t j = 0; j < d && rep.ok; ++j)
            for (size_t k = 0; k < d && rep.ok; ++k) {
                std::map<int, CycRat> lhs, rhs;
                auto add = [&](std::map<int, CycRat>& acc, const SparseVec& v,
                               const CycRat& c) {
                    for (const auto& [idx, s] : v) {
                        auto it = acc.emplace(idx, CycRat::zero(H.field)).first;
                        it->second = it->second + c * s;
                    }
                };
                for (const auto& [l, c] : H.mult[i][j]) add(lhs, H.mult[l][k], c);
                for (const auto& [l, c] : H.mult[j][k]) add(rhs, H.mult[i][l], c);
                for (const auto& [idx, s] : rhs) add(lhs, {{idx, CycRat::one(H.field)}}, -s);
                bool zero = true;
                for (const auto& [idx, s] : lhs) zero = zero && s.is_zero();
                if (!zero)
                    fail("associativity fails on (" + H.basis[i] + "," + H.basis[j] + "," +
                         H.basis[k] + ")");
            }

    // coassociativity and counit
    for (size_t i = 0; i < d && rep.ok; ++i) {
        TensorElement left, right; // (Delta x id)Delta vs (id x Delta)Delta
        left.legs = right.legs = 3;
        for (const auto& [j, l, s] : H.comult[i]) {
            for (const auto& [a, b, s2] : H.comult[j]) {
                auto& t = left.terms[{a, b, l}];
                if (!t.field()) t = CycRat::zero(H.field);
                t = t + s * s2;
            }
            for (const auto& [a, b, s2] : H.comult[l]) {
                auto& t = right.terms[{j, a, b}];
                if (!t.field()) t = CycRat::zero(H.field);
                t = t + s * s2;
            }
        }
        for (auto it = left.terms.begin(); it != left.terms.end();)
            it = it->second.is_zero() ? left.terms.erase(it) : std::next(it);
        for (auto it = right.terms.begin(); it != right.terms.end();)
            it = it->second.is_zero() ? right.terms.erase(it) : std::next(it);
        if (!(left == right)) fail("coassociativity fails on " + H.basis[i]);

        std::vector<CycRat> lcu(d, CycRat::zero(H.field)), rcu = lcu;
        for (const auto& [j, l, s] : H.comult[i]) {
            lcu[l] = lcu[l] + s * H.counit[j];
            rcu[j] = rcu[j] + s * H.counit[l];
        }
        if (!dense_eq(lcu, H.basis_elem(i)) || !dense_eq(rcu, H.basis_elem(i)))
            fail("counit axiom fails on " + H.basis[i]);
    }

    // Delta and epsilon are algebra maps
    for (size_t i = 0; i < d && rep.ok; ++i)
        for (size_t j = 0; j < d && rep.ok; ++j) {
            Tensor2 lhs, rhs;
            for (const auto& [k, c] : H.mult[i][j])
                for (const auto& [a, b, s] : H.comult[k]) {
                    auto& t = lhs[{a, b}];
                    if (!t.field()) t = CycRat::zero(H.field);
                    t = t + c * s;
                }
            Tensor2 di, dj;
            for (const auto& [a, b, s] : H.comult[i]) di[{a, b}] = s;
            for (const auto& [a, b, s] : H.comult[j]) dj[{a, b}] = s;
            rhs = t2_mul(H, di, dj);
            for (auto it = lhs.begin(); it != lhs.end();)
                it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
            if (!(lhs == rhs))
                fail("Delta not multiplicative on (" + H.basis[i] + "," + H.basis[j] + ")");

            CycRat el = CycRat::zero(H.field);
            for (const auto& [k, c] : H.mult[i][j]) el = el + c * H.counit[k];
            if (el != H.counit[i] * H.counit[j])
                fail("epsilon not multiplicative on (" + H.basis[i] + "," + H.basis[j] + ")");
        }

    // antipode axiom m(S x id)Delta = u eps = m(id x S)Delta
    for (size_t i = 0; i < d && rep.ok; ++i) {
        std::vector<CycRat> lhs(d, CycRat::zero(H.field)), rhs = lhs;
        for (const auto& [j, l, s] : H.comult[i]) {
            auto sj = H.multiply(H.dense(H.antipode[j]), H.basis_elem(l));
            auto sl = H.multiply(H.basis_elem(j), H.dense(H.antipode[l]));
            for (size_t k = 0; k < d; ++k) {
                lhs[k] = lhs[k] + s * sj[k];
                rhs[k] = rhs[k] + s * sl[k];
            }
        }
        std::vector<CycRat> target(d, CycRat::zero(H.field));
        for (const auto& [k, c] : H.unit) target[k] = target[k] + H.counit[i] * c;
        if (!dense_eq(lhs, target) || !dense_eq(rhs, target))
            fail("antipode axiom fails on " + H.basis[i]);
    }
    return rep;
}

std::pair<FiniteHopf, bool> dual_and_cocommutative(const FiniteHopf& H) {
    size_t d = H.dim();
    FiniteHopf D;
    D.field = H.field;
    D.kind = HopfKind::Other;
    for (const auto& b : H.basis) D.basis.push_back(b + "*");

    D.mult.assign(d, std::vector<SparseVec>(d));
    for (size_t k = 0; k < d; ++k)
        for (const auto& [i, j, s] : H.comult[k]) D.mult[i][j].push_back({(int)k, s});
    for (size_t i = 0; i < d; ++i)
        if (!H.counit[i].is_zero()) D.unit.push_back({(int)i, H.counit[i]});
    D.comult.assign(d, {});
    for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k)
            for (const auto& [i, s] : H.mult[j][k]) D.comult[i].push_back({(int)j, (int)k, s});
    D.counit.assign(d, CycRat::zero(H.field));
    for (const auto& [k, c] : H.unit) D.counit[k] = c;
    D.antipode.assign(d, {});
    for (size_t j = 0; j < d; ++j)
        for (const auto& [i, s] : H.antipode[j]) D.antipode[i].push_back({(int)j, s});

    bool cocomm = true;
    for (size_t i = 0; i < d && cocomm; ++i) {
        Tensor2 fwd, flip;
        for (const auto& [j, l, s] : H.comult[i]) {
            auto& a = fwd[{j, l}];
            if (!a.field()) a = CycRat::zero(H.field);
            a = a + s;
            auto& b = flip[{l, j}];
            if (!b.field()) b = CycRat::zero(H.field);
            b = b + s;
        }
        for (auto it = fwd.begin(); it != fwd.end();)
            it = it->second.is_zero() ? fwd.erase(it) : std::next(it);
        for (auto it = flip.begin(); it != flip.end();)
            it = it->second.is_zero() ? flip.erase(it) : std::next(it);
        if (!(fwd == flip)) cocomm = false;
    }
    return {std::move(D), cocomm};
}

} // namespace pha
