#include "qhopf/rep.hpp"

#include "qhopf/enumerate.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/render.hpp"
#include "qhopf/symalg.hpp"

#include <algorithm>
#include <sstream>

namespace qhopf {

DimVector parse_dims(const std::string& text, const Quiver& q) {
    DimVector l;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw Error("bad dimension '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw Error("bad dimension '" + tok + "'");
        if (v < 0 || v > 31) throw Error("dimension out of range: " + tok);
        l.dims.push_back(v);
    }
    if (l.dims.size() != q.vertices.size())
        throw Error("expected " + std::to_string(q.vertices.size()) + " dimensions, got " +
                    std::to_string(l.dims.size()));
    return l;
}

RepMono::RepMono(std::vector<std::pair<VarId, int>> powers) : powers_(std::move(powers)) {
    std::sort(powers_.begin(), powers_.end());
    std::size_t w = 0;
    for (std::size_t i = 0; i < powers_.size(); ++i) {
        if (powers_[i].second == 0) continue;
        if (powers_[i].second < 0) throw Error("negative exponent");
        if (w > 0 && powers_[w - 1].first == powers_[i].first)
            powers_[w - 1].second += powers_[i].second;
        else
            powers_[w++] = powers_[i];
    }
    powers_.resize(w);
    rehash();
}

int RepMono::power(VarId v) const {
    for (const auto& [var, k] : powers_)
        if (var == v) return k;
    return 0;
}

int RepMono::degree() const {
    int d = 0;
    for (const auto& [var, k] : powers_) d += k;
    return d;
}

RepMono RepMono::times(const RepMono& o) const {
    std::vector<std::pair<VarId, int>> all = powers_;
    all.insert(all.end(), o.powers_.begin(), o.powers_.end());
    return RepMono(std::move(all));
}

RepMono RepMono::lowered(VarId v, int k) const {
    std::vector<std::pair<VarId, int>> out;
    out.reserve(powers_.size());
    for (auto [var, p] : powers_) {
        if (var == v) p -= k;
        if (p < 0) throw Error("exponent underflow");
        if (p > 0) out.emplace_back(var, p);
    }
    return RepMono(std::move(out));
}

bool RepMono::operator<(const RepMono& o) const {
    if (degree() != o.degree()) return degree() > o.degree();
    return powers_ < o.powers_;
}

void RepMono::rehash() {
    std::uint64_t h = 0x1f83d9abfb41bd6bull;
    for (auto [v, k] : powers_) {
        h ^= static_cast<std::uint64_t>(v + 1) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(k) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    hash_ = h;
}

RepPoly rep_mul(const RepPoly& a, const RepPoly& b) {
    RepPoly out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add(ma.times(mb), ca * cb);
    return out;
}

namespace {

RepPoly trace_necklace(const Necklace& f, const DimVector& l, const DoubleQuiver& dq) {
    if (f.is_idempotent()) return RepPoly::basis(RepMono::one()).scaled(HPoly(Rat(l.at(f.vertex()))));

    const auto& w = f.word();
    const int n = static_cast<int>(w.size());
    // Junction r sits before letter r; letter r contributes entry
    // (row = junction r+1, column = junction r).
    std::vector<int> dim(n);
    for (int r = 0; r < n; ++r) dim[r] = l.at(dq.tail(w[r]));
    for (int d : dim)
        if (d == 0) return RepPoly();

    RepPoly out;
    std::vector<int> j(n, 1);
    while (true) {
        std::vector<std::pair<VarId, int>> vars;
        vars.reserve(n);
        for (int r = 0; r < n; ++r) vars.emplace_back(make_var(w[r], j[(r + 1) % n], j[r]), 1);
        out.add(RepMono(std::move(vars)), HPoly::one());
        int r = n - 1;
        while (r >= 0 && j[r] == dim[r]) j[r--] = 1;
        if (r < 0) break;
        ++j[r];
    }
    return out;
}

}  // namespace

RepPoly trace_rep(const NecklaceMonomial& p, const DimVector& l, const DoubleQuiver& dq) {
    RepPoly out = RepPoly::basis(RepMono::one());
    for (const Necklace& f : p.factors()) out = rep_mul(out, trace_necklace(f, l, dq));
    return out;
}

RepPoly trace_rep(const SymLElement& p, const DimVector& l, const DoubleQuiver& dq) {
    return p.map_basis([&](const NecklaceMonomial& m) { return trace_rep(m, l, dq); });
}

namespace {

void validate_vars(const RepPoly& f, const DimVector& l, const DoubleQuiver& dq,
                   const char* who) {
    for (const auto& [m, c] : f.terms()) {
        for (auto [v, k] : m.powers()) {
            DartId d = var_dart(v);
            if (d < 0 || d >= dq.dart_count())
                throw Error(std::string(who) + ": variable dart out of range");
            if (var_row(v) < 1 || var_row(v) > l.at(dq.head(d)) || var_col(v) < 1 ||
                var_col(v) > l.at(dq.tail(d)))
                throw Error(std::string(who) + ": variable index exceeds dimensions");
        }
    }
}

// One interaction channel between a term pair: variable v on the left
// couples with conj(v) on the right. Starred left-hand variables act with a
// minus sign per derivative order.
struct Channel {
    VarId left;
    VarId right;
    int max_order;
    bool starred;
};

void moyal_term(const RepMono& mu, const HPoly& cf, const RepMono& nu, const HPoly& cg,
                const DoubleQuiver& dq, RepPoly& out) {
    std::vector<Channel> chans;
    for (auto [v, a] : mu.powers()) {
        VarId c = conj_var(v, dq);
        int b = nu.power(c);
        if (b > 0) chans.push_back({v, c, std::min(a, b), !dq.is_original(var_dart(v))});
    }
    HPoly base = cf * cg;
    // Depth-first over derivative orders per channel.
    std::vector<int> k(chans.size(), 0);
    auto emit = [&]() {
        Rat coeff = 1;
        int total = 0;
        RepMono mleft = mu, mright = nu;
        for (std::size_t i = 0; i < chans.size(); ++i) {
            if (k[i] == 0) continue;
            const Channel& ch = chans[i];
            int a = mu.power(ch.left), b = nu.power(ch.right);
            Rat f = Rat(binomial(a, k[i]) * binomial(b, k[i]) * factorial(k[i]));
            if (ch.starred && k[i] % 2) f = -f;
            coeff *= f;
            total += k[i];
            mleft = mleft.lowered(ch.left, k[i]);
            mright = mright.lowered(ch.right, k[i]);
        }
        out.add(mleft.times(mright), (base * half_h_pow(total)).scaled(coeff));
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == chans.size()) {
            emit();
            return;
        }
        for (k[i] = 0; k[i] <= chans[i].max_order; ++k[i]) self(self, i + 1);
        k[i] = 0;
    };
    rec(rec, 0);
}

}  // namespace

RepPoly classical_moyal(const RepPoly& f, const RepPoly& g, const DimVector& l,
                        const DoubleQuiver& dq) {
    validate_vars(f, l, dq, "classical_moyal");
    validate_vars(g, l, dq, "classical_moyal");
    RepPoly out;
    for (const auto& [mu, cf] : f.terms())
        for (const auto& [nu, cg] : g.terms()) moyal_term(mu, cf, nu, cg, dq, out);
    return out;
}

namespace {

RepPoly partial(const RepPoly& f, VarId v) {
    RepPoly out;
    for (const auto& [m, c] : f.terms()) {
        int k = m.power(v);
        if (k == 0) continue;
        out.add(m.lowered(v, 1), c.scaled(Rat(k)));
    }
    return out;
}

}  // namespace

RepPoly rep_poisson(const RepPoly& f, const RepPoly& g, const DimVector& l,
                    const DoubleQuiver& dq) {
    validate_vars(f, l, dq, "rep_poisson");
    validate_vars(g, l, dq, "rep_poisson");
    // Pairs (x, y) = ((M_e)_{ij}, (M_{e*})_{ji}); {f,g} = sum over pairs of
    // df/dx dg/dy - df/dy dg/dx. Only variables present matter.
    std::vector<VarId> xs;
    auto collect = [&](const RepPoly& p) {
        for (const auto& [m, c] : p.terms())
            for (auto [v, k] : m.powers()) {
                VarId x = dq.is_original(var_dart(v)) ? v : conj_var(v, dq);
                if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
            }
    };
    collect(f);
    collect(g);
    std::sort(xs.begin(), xs.end());

    RepPoly out;
    for (VarId x : xs) {
        VarId y = conj_var(x, dq);
        out += rep_mul(partial(f, x), partial(g, y));
        out -= rep_mul(partial(f, y), partial(g, x));
    }
    return out;
}

DiffOp diff_one() {
    return DiffOp::basis(DiffTerm{RepMono::one(), RepMono::one()});
}

DiffOp diff_mul(const DiffOp& a, const DiffOp& b) {
    DiffOp out;
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            // Push the left derivatives past the right coordinates:
            // d^n x^m = sum_k C(n,k) m!/(m-k)! x^(m-k) d^(n-k) per variable.
            std::vector<Channel> chans;
            for (auto [v, n] : ta.deriv.powers()) {
                int m = tb.coord.power(v);
                if (m > 0) chans.push_back({v, v, std::min(n, m), false});
            }
            HPoly base = ca * cb;
            std::vector<int> k(chans.size(), 0);
            auto emit = [&]() {
                Rat coeff = 1;
                RepMono dleft = ta.deriv, cright = tb.coord;
                for (std::size_t i = 0; i < chans.size(); ++i) {
                    if (k[i] == 0) continue;
                    int n = ta.deriv.power(chans[i].left);
                    int m = tb.coord.power(chans[i].left);
                    coeff *= Rat(binomial(n, k[i]) * falling(m, k[i]));
                    dleft = dleft.lowered(chans[i].left, k[i]);
                    cright = cright.lowered(chans[i].left, k[i]);
                }
                out.add(DiffTerm{ta.coord.times(cright), dleft.times(tb.deriv)},
                        base.scaled(coeff));
            };
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == chans.size()) {
                    emit();
                    return;
                }
                for (k[i] = 0; k[i] <= chans[i].max_order; ++k[i]) self(self, i + 1);
                k[i] = 0;
            };
            rec(rec, 0);
        }
    }
    return out;
}

namespace {

// The operator substituted for one variable occurrence.
DiffOp atom_op(VarId v, const DoubleQuiver& dq) {
    if (dq.is_original(var_dart(v)))
        return DiffOp::basis(DiffTerm{RepMono::var(v), RepMono::one()});
    DiffOp d = DiffOp::basis(DiffTerm{RepMono::one(), RepMono::var(conj_var(v, dq))});
    d.scale(-HPoly::h());
    return d;
}

DiffOp weyl_mono(const RepMono& m, const DoubleQuiver& dq) {
    std::vector<VarId> atoms;
    Int dup = 1;
    for (auto [v, k] : m.powers()) {
        dup *= factorial(static_cast<unsigned>(k));
        for (int i = 0; i < k; ++i) atoms.push_back(v);
    }
    int n = static_cast<int>(atoms.size());
    if (n > 10) throw Error("symmetrization over " + std::to_string(n) + "! orderings refused");

    // next_permutation over the multiset yields each distinct ordering once;
    // each stands for `dup` of the n! slot orderings.
    DiffOp sum;
    do {
        DiffOp prod = diff_one();
        for (VarId v : atoms) prod = diff_mul(prod, atom_op(v, dq));
        sum += prod;
    } while (std::next_permutation(atoms.begin(), atoms.end()));
    sum.scale(HPoly(Rat(dup, factorial(static_cast<unsigned>(n)))));
    return sum;
}

}  // namespace

DiffOp weyl_symmetrize(const RepPoly& f, const DoubleQuiver& dq) {
    DiffOp out;
    for (const auto& [m, c] : f.terms()) {
        DiffOp w = weyl_mono(m, dq);
        w.scale(c);
        out += w;
    }
    return out;
}

DiffOp rho(const HeightedCollection& c, const DimVector& l, const DoubleQuiver& dq) {
    if (!c.heights_consistent())
        throw Error("heights must be exactly 1..N across the collection");

    Rat scalar = 1;
    struct WordPlan {
        const HeightedNecklace* f;
        std::vector<int> dim;  // junction sizes
    };
    std::vector<WordPlan> words;
    for (const HeightedNecklace& f : c.factors()) {
        if (f.is_idempotent()) {
            scalar *= l.at(f.vertex());
            continue;
        }
        WordPlan wp{&f, {}};
        for (auto [d, ht] : f.word()) wp.dim.push_back(l.at(dq.tail(d)));
        words.push_back(std::move(wp));
    }
    if (scalar == 0) return DiffOp();

    // Atoms across all factors, ordered by height once; junction indices
    // vary per factor independently.
    struct Slot {
        int word;  // index into words
        int pos;   // letter position
        int height;
    };
    std::vector<Slot> slots;
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        const auto& w = words[wi].f->word();
        for (std::size_t r = 0; r < w.size(); ++r)
            slots.push_back({static_cast<int>(wi), static_cast<int>(r), w[r].second});
    }
    std::sort(slots.begin(), slots.end(),
              [](const Slot& a, const Slot& b) { return a.height < b.height; });

    // Odometer over the joint junction assignment of every word factor.
    std::vector<std::vector<int>> j(words.size());
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        for (int d : words[wi].dim)
            if (d == 0) return DiffOp();
        j[wi].assign(words[wi].dim.size(), 1);
    }

    DiffOp out;
    while (true) {
        DiffOp prod = diff_one();
        for (const Slot& s : slots) {
            const auto& w = words[s.word].f->word();
            int n = static_cast<int>(w.size());
            VarId v = make_var(w[s.pos].first, j[s.word][(s.pos + 1) % n], j[s.word][s.pos]);
            prod = diff_mul(prod, atom_op(v, dq));
        }
        out += prod;

        std::size_t wi = 0;
        bool carried = true;
        while (carried && wi < words.size()) {
            carried = false;
            auto& jw = j[wi];
            int r = static_cast<int>(jw.size()) - 1;
            while (r >= 0 && jw[r] == words[wi].dim[r]) jw[r--] = 1;
            if (r >= 0) {
                ++jw[r];
            } else {
                carried = true;
                ++wi;
            }
        }
        if (carried) break;
    }
    out.scale(HPoly(scalar));
    return out;
}

DiffOp rho(const HeightedElement& e, const DimVector& l, const DoubleQuiver& dq) {
    DiffOp out;
    for (const auto& [c, coeff] : e.terms()) {
        DiffOp op = rho(c, l, dq);
        op.scale(coeff);
        out += op;
    }
    return out;
}

CheckResult check_diagram(const SymLElement& p, const SymLElement& r, const DimVector& l,
                          const DoubleQuiver& dq) {
    RepPoly lhs = trace_rep(star(p, r, dq), l, dq);
    RepPoly rhs = classical_moyal(trace_rep(p, l, dq), trace_rep(r, l, dq), l, dq);
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("tr(P*R) = " + to_string(lhs, dq) + " but tr(P)*tr(R) = " +
                             to_string(rhs, dq) + " for P = " + to_string(p, dq) + ", R = " +
                             to_string(r, dq));
}

CheckResult check_transport(const SymLElement& p, const DimVector& l, const DoubleQuiver& dq) {
    DiffOp lhs = rho(phi_w(p, dq), l, dq);
    DiffOp rhs = weyl_symmetrize(trace_rep(p, l, dq), dq);
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("rho(phi_W(P)) = " + to_string(lhs, dq) +
                             " but weyl(tr(P)) = " + to_string(rhs, dq) + " for P = " +
                             to_string(p, dq));
}

CheckResult check_poisson_hom(const Necklace& f, const Necklace& g, const DimVector& l,
                              const DoubleQuiver& dq) {
    RepPoly lhs = trace_rep(bracket(f, g, dq), l, dq);
    RepPoly rhs = rep_poisson(trace_rep(NecklaceMonomial::single(f), l, dq),
                              trace_rep(NecklaceMonomial::single(g), l, dq), l, dq);
    if (lhs == rhs) return CheckResult::pass();
    SymLElement ef = necklace_element(f), eg = necklace_element(g);
    return CheckResult::fail("tr({f,g}) = " + to_string(lhs, dq) + " but {tr f, tr g} = " +
                             to_string(rhs, dq) + " for f = " + to_string(ef, dq) + ", g = " +
                             to_string(eg, dq));
}

RankReport check_injectivity(int max_degree, const DimVector& l, const DoubleQuiver& dq,
                             bool with_idempotents) {
    std::vector<NecklaceMonomial> basis = monomials_up_to_degree(dq, max_degree);
    if (!with_idempotents) {
        std::erase_if(basis, [](const NecklaceMonomial& m) { return m.idempotent_count() > 0; });
    }

    // Rows: traces expanded over a common column basis of rep monomials.
    std::vector<RepPoly> rows;
    rows.reserve(basis.size());
    std::vector<RepMono> cols;
    for (const NecklaceMonomial& m : basis) {
        RepPoly t = trace_rep(m, l, dq);
        for (const auto& [rm, c] : t.terms()) {
            if (std::find(cols.begin(), cols.end(), rm) == cols.end()) cols.push_back(rm);
        }
        rows.push_back(std::move(t));
    }
    std::sort(cols.begin(), cols.end());

    const int nr = static_cast<int>(rows.size());
    const int nc = static_cast<int>(cols.size());
    std::vector<std::vector<Rat>> a(nr, std::vector<Rat>(nc, Rat(0)));
    for (int i = 0; i < nr; ++i) {
        for (const auto& [rm, c] : rows[i].terms()) {
            if (c.max_degree() != 0 || c.min_degree() != 0)
                throw Error("trace with h-dependence in rank check");
            int col = static_cast<int>(std::lower_bound(cols.begin(), cols.end(), rm) -
                                       cols.begin());
            a[i][col] = c.coeff(0);
        }
    }

    // Row reduction with an identity tail: a vanished row exposes the
    // dependency coefficients directly.
    std::vector<std::vector<Rat>> id(nr, std::vector<Rat>(nr, Rat(0)));
    for (int i = 0; i < nr; ++i) id[i][i] = 1;

    RankReport report;
    report.count = nr;
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int pivot = -1;
        for (int i = rank; i < nr; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(id[pivot], id[rank]);
        for (int i = rank + 1; i < nr; ++i) {
            if (a[i][col] == 0) continue;
            Rat c = a[i][col] / a[rank][col];
            for (int k = col; k < nc; ++k) a[i][k] -= c * a[rank][k];
            for (int k = 0; k < nr; ++k) id[i][k] -= c * id[rank][k];
        }
        ++rank;
    }
    report.rank = rank;
    report.independent = rank == nr;
    if (!report.independent) {
        // The first zero row of the reduced matrix.
        std::string dep;
        for (int k = 0; k < nr; ++k) {
            if (id[rank][k] == 0) continue;
            if (!dep.empty()) dep += " + ";
            dep += rat_str(id[rank][k]) + " tr[" + to_string(basis[k], dq) + "]";
        }
        report.dependency = dep + " = 0";
    }
    return report;
}

}  // namespace qhopf
