#include "tzeta/padic_interp.hpp"

#include "tzeta/combinatorics.hpp"

#include <sstream>

namespace tzeta {

namespace {

/// Visit every multi-index in prod_n {0..bounds[n]}.
template <typename F>
void for_each_box(const std::vector<unsigned>& bounds, F&& visit) {
    MultiIndex cur(bounds.size());
    while (true) {
        visit(static_cast<const MultiIndex&>(cur));
        std::size_t i = 0;
        for (; i < bounds.size(); ++i) {
            if (cur[i] < bounds[i]) {
                ++cur[i];
                for (std::size_t j = 0; j < i; ++j) cur[j] = 0;
                break;
            }
        }
        if (i == bounds.size()) break;
    }
}

std::vector<Rational> negated_point(const MultiIndex& j) {
    std::vector<Rational> out(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out[i] = Rational(-static_cast<long>(j[i]));
    return out;
}

}  // namespace

Cyclotomic theorem4_value(const ZetaSpec& spec, const MultiIndex& k) {
    if (static_cast<int>(k.size()) != spec.num_bases())
        throw std::invalid_argument("theorem4_value: k must have length T");
    const long order = spec.common_order();
    if (spec.weight().is_zero()) return Cyclotomic::zero(order);

    const int N = spec.nvars();
    // D_n = deg_{X_n} Q + sum_t k_t deg_{X_n} P_t  (degrees add over a domain)
    std::vector<unsigned> bounds(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) {
        unsigned d = spec.weight().degree_in_var(n);
        for (std::size_t t = 0; t < spec.bases().size(); ++t)
            d += k[t] * spec.bases()[t].degree_in_var(n);
        bounds[static_cast<std::size_t>(n)] = d;
    }

    // The double sum factors through the coordinates: summing over l first,
    //   sum_{l>=j} C(l,j) (1-mu)^{-l} = prod_n W_n[j_n],
    //   W_n[j] = sum_{l=j}^{D_n} C(l,j) u_n^l  with u_n = (1-mu_n)^{-1}.
    std::vector<std::vector<Cyclotomic>> W(static_cast<std::size_t>(N));
    const Cyclotomic one = Cyclotomic::one(order);
    Cyclotomic prefactor = one;
    for (int n = 0; n < N; ++n) {
        const Cyclotomic& mu = spec.twists()[static_cast<std::size_t>(n)];
        const Cyclotomic u = (one - mu).inverse();
        prefactor *= mu * u;
        const unsigned D = bounds[static_cast<std::size_t>(n)];
        std::vector<Cyclotomic> upow;
        upow.reserve(D + 1);
        upow.push_back(one);
        for (unsigned l = 1; l <= D; ++l) upow.push_back(upow.back() * u);
        auto& row = W[static_cast<std::size_t>(n)];
        row.assign(D + 1, Cyclotomic::zero(order));
        for (unsigned j = 0; j <= D; ++j)
            for (unsigned l = j; l <= D; ++l)
                row[j] += Rational(binomial(l, j)) * upow[l];
    }

    Cyclotomic acc = Cyclotomic::zero(order);
    for_each_box(bounds, [&](const MultiIndex& j) {
        const std::vector<Rational> point = negated_point(j);
        Rational f = spec.weight().evaluate(point);
        if (f.is_zero()) return;
        for (std::size_t t = 0; t < spec.bases().size(); ++t)
            f *= spec.bases()[t].evaluate(point).pow(static_cast<long>(k[t]));
        if (f.is_zero()) return;
        if (j.total_degree() % 2 == 1) f = -f;
        Cyclotomic term = Cyclotomic(f, order);
        for (std::size_t n = 0; n < j.size(); ++n) term *= W[n][j[n]];
        acc += term;
    });
    return prefactor * acc;
}

bool PAdicHypothesisReport::all_ok() const {
    if (!p_ok || !precision_ok || !weight_integral || !residues_ok) return false;
    for (const auto& b : per_base)
        if (!b.integer_coefficients || !b.unit_values) return false;
    for (const auto& t : per_twist)
        if (!t.nontrivial || !t.order_divides || !t.norm_ok) return false;
    return true;
}

std::string PAdicHypothesisReport::format() const {
    std::ostringstream os;
    os << "p check: " << (p_ok ? "PASS" : "FAIL (need an odd prime)") << "\n";
    os << "precision check: " << (precision_ok ? "PASS" : "FAIL (need M >= 1)") << "\n";
    os << "Q integral: " << (weight_integral ? "PASS" : "FAIL") << "\n";
    if (!residues_ok) os << "r check: FAIL (entries must lie in [0, p-1])\n";
    for (std::size_t t = 0; t < per_base.size(); ++t) {
        const auto& b = per_base[t];
        os << "P" << (t + 1) << ": integral " << (b.integer_coefficients ? "PASS" : "FAIL")
           << ", unit values " << (b.unit_values ? "PASS" : "FAIL");
        if (b.offending_residue) {
            os << " (p divides P at j = (";
            for (std::size_t i = 0; i < b.offending_residue->size(); ++i) {
                if (i) os << ",";
                os << (*b.offending_residue)[i];
            }
            os << "))";
        }
        os << "\n";
    }
    for (std::size_t n = 0; n < per_twist.size(); ++n) {
        const auto& t = per_twist[n];
        os << "mu" << (n + 1) << ": order " << t.order << " "
           << (t.order_divides ? "divides p-1" : "DOES NOT divide p-1")
           << (t.nontrivial ? "" : ", FAIL: mu = 1")
           << (t.norm_ok ? ", |1-mu|_p = 1" : ", FAIL: |1-mu|_p too small") << "\n";
    }
    os << (all_ok() ? "all hypotheses PASS" : "hypothesis check FAILED") << "\n";
    return os.str();
}

PAdicHypothesisReport check_padic_hypotheses(const ZetaSpec& spec, const PAdicContext& ctx,
                                             std::span<const long> residues) {
    PAdicHypothesisReport rep;
    rep.p_ok = ctx.p >= 3 && is_prime(ctx.p);
    rep.precision_ok = ctx.precision >= 1;
    for (long r : residues)
        if (r < 0 || r >= ctx.p) rep.residues_ok = false;

    for (const auto& [exp, c] : spec.weight().terms())
        if (!c.is_integer()) rep.weight_integral = false;

    const int N = spec.nvars();
    for (const auto& base : spec.bases()) {
        PAdicHypothesisReport::PerBase pb;
        for (const auto& [exp, c] : base.terms())
            if (!c.is_integer()) pb.integer_coefficients = false;
        if (pb.integer_coefficients && rep.p_ok) {
            // P has integer coefficients, so P(j) mod p only depends on
            // j mod p: scanning (Z/p)^N settles hypothesis c) for all of Z^N.
            std::vector<unsigned> bounds(static_cast<std::size_t>(N),
                                         static_cast<unsigned>(ctx.p - 1));
            for_each_box(bounds, [&](const MultiIndex& j) {
                if (!pb.unit_values) return;
                std::vector<Rational> point(j.size());
                for (std::size_t i = 0; i < j.size(); ++i) point[i] = Rational(static_cast<long>(j[i]));
                const BigInt v = base.evaluate(point).numerator();
                if (v % ctx.p == 0) {
                    pb.unit_values = false;
                    std::vector<long> at(j.size());
                    for (std::size_t i = 0; i < j.size(); ++i) at[i] = static_cast<long>(j[i]);
                    pb.offending_residue = std::move(at);
                }
            });
        }
        rep.per_base.push_back(std::move(pb));
    }

    for (const auto& mu : spec.twists()) {
        PAdicHypothesisReport::PerTwist pt;
        pt.order = mu.order();
        pt.nontrivial = !mu.is_one();
        pt.order_divides = rep.p_ok && ((ctx.p - 1) % mu.order() == 0);
        if (pt.order_divides && pt.nontrivial && rep.precision_ok) {
            const PAdic img = embed_cyclotomic(Cyclotomic::one(mu.order()) - mu, ctx.p,
                                               ctx.precision, ctx.embedding);
            pt.norm_ok = !img.is_zero() && img.valuation() == 0;
        } else {
            pt.norm_ok = false;
        }
        rep.per_twist.push_back(pt);
    }
    return rep;
}

PAdicSpec::PAdicSpec(ZetaSpec spec, PAdicContext ctx, std::vector<long> residues)
    : spec_(std::move(spec)), ctx_(std::move(ctx)), residues_(std::move(residues)) {
    if (static_cast<int>(residues_.size()) != spec_.num_bases())
        throw std::invalid_argument("PAdicSpec: need one residue class per base (length T)");
    PAdicHypothesisReport rep = check_padic_hypotheses(spec_, ctx_, residues_);
    if (!rep.all_ok())
        throw HypothesisError("PAdicSpec: interpolation hypotheses fail\n" + rep.format(),
                              std::move(rep));
}

namespace {

struct PAdicWorker {
    const PAdicSpec& pspec;
    long p;
    int prec;
    std::vector<PAdic> inv_one_minus_mu;  // (1-mu_n)^{-1}
    PAdic prefactor;                      // prod_n mu_n (1-mu_n)^{-1}

    explicit PAdicWorker(const PAdicSpec& ps)
        : pspec(ps),
          p(ps.context().p),
          prec(ps.context().precision),
          prefactor(PAdic::one(ps.context().p, ps.context().precision)) {
        const auto& spec = ps.spec();
        const Cyclotomic one = Cyclotomic::one(spec.common_order());
        for (const auto& mu : spec.twists()) {
            const PAdic inv =
                embed_cyclotomic(one - mu, p, prec, ps.context().embedding).inverse();
            inv_one_minus_mu.push_back(inv);
            prefactor *= embed_cyclotomic(mu, p, prec, ps.context().embedding) * inv;
        }
    }

    /// Q(-j) prod_t w(P_t(-j))^{r_t} <P_t(-j)>^{-s_t}
    PAdic point_factor(const MultiIndex& j, std::span<const PAdic> s) const {
        const auto& spec = pspec.spec();
        const std::vector<Rational> point = negated_point(j);
        PAdic acc = PAdic::from_rational(spec.weight().evaluate(point), p, prec);
        if (acc.is_exact_zero()) return acc;
        for (std::size_t t = 0; t < spec.bases().size(); ++t) {
            const Rational value = spec.bases()[t].evaluate(point);
            const BigInt n = value.numerator();  // integral by the spec invariants
            if (!value.is_integer() || n % p == 0)
                throw HypothesisError(
                    "z_ell_r: P" + std::to_string(t + 1) + "(" + "-" + j.to_string() +
                        ") = " + value.to_string() + " is not a p-adic unit",
                    check_padic_hypotheses(spec, pspec.context(), pspec.residues()));
            const PAdic w = teichmuller(n, p, prec);
            const PAdic bracket = PAdic::from_integer(n, p, prec) * w.inverse();
            acc *= w.pow(pspec.residues()[t]) * unit_pow(bracket, -s[t]);
        }
        return acc;
    }

    /// (1-mu)^{-l} sum_{j<=l} (-1)^{|j|} C(l,j) * factor(j), with the
    /// factors supplied by `lookup` (cached or computed on the fly).
    template <typename Lookup>
    PAdic ell_term(const MultiIndex& ell, Lookup&& lookup) const {
        PAdic sum = PAdic::exact_zero(p);
        for_each_box(std::vector<unsigned>(ell.entries()), [&](const MultiIndex& j) {
            BigInt c = multi_binomial(ell, j);
            if (j.total_degree() % 2 == 1) c = -c;
            sum += PAdic::from_integer(c, p, prec) * lookup(j);
        });
        PAdic scale = PAdic::one(p, prec);
        for (std::size_t n = 0; n < ell.size(); ++n)
            scale *= inv_one_minus_mu[n].pow(static_cast<long>(ell[n]));
        return scale * sum;
    }
};

}  // namespace

PAdic z_ell_r(const PAdicSpec& pspec, const MultiIndex& ell, std::span<const PAdic> s) {
    if (static_cast<int>(ell.size()) != pspec.spec().nvars())
        throw std::invalid_argument("z_ell_r: ell must have length N");
    if (static_cast<int>(s.size()) != pspec.spec().num_bases())
        throw std::invalid_argument("z_ell_r: s must have length T");
    const PAdicWorker worker(pspec);
    return worker.ell_term(ell, [&](const MultiIndex& j) { return worker.point_factor(j, s); });
}

PAdic zp_r_eval(const PAdicSpec& pspec, std::span<const PAdic> s, long target_m) {
    const long p = pspec.context().p;
    const int prec = pspec.context().precision;
    if (static_cast<int>(s.size()) != pspec.spec().num_bases())
        throw std::invalid_argument("zp_r_eval: s must have length T");
    if (target_m < 1 || target_m > prec)
        throw std::invalid_argument("zp_r_eval: target precision must lie in [1, context precision]");

    const PAdicWorker worker(pspec);
    const int N = pspec.spec().nvars();

    // Terms with sum_n v_p(l_n!) >= m have norm <= p^{-m} and are dropped;
    // v_p(l!) >= 1 once l >= p, so the kept box is finite.
    unsigned lmax = 0;
    while (factorial_valuation(lmax + 1, p) < target_m) ++lmax;
    const std::vector<unsigned> bounds(static_cast<std::size_t>(N), lmax);

    // every kept (l, j) pair has j inside the kept box too, so cache the
    // point factors across l
    std::vector<std::optional<PAdic>> cache;
    std::size_t grid = 1;
    for (int n = 0; n < N; ++n) grid *= static_cast<std::size_t>(lmax) + 1;
    cache.resize(grid);
    auto flat = [&](const MultiIndex& j) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < j.size(); ++i) idx = idx * (static_cast<std::size_t>(lmax) + 1) + j[i];
        return idx;
    };
    auto lookup = [&](const MultiIndex& j) -> const PAdic& {
        auto& slot = cache[flat(j)];
        if (!slot) slot = worker.point_factor(j, s);
        return *slot;
    };

    PAdic acc = PAdic::exact_zero(p);
    for_each_box(bounds, [&](const MultiIndex& ell) {
        long legendre = 0;
        for (std::size_t n = 0; n < ell.size(); ++n) legendre += factorial_valuation(ell[n], p);
        if (legendre >= target_m) return;
        acc += worker.ell_term(ell, lookup);
    });

    return (worker.prefactor * acc).capped_abs_precision(target_m);
}

PAdic zp_r_eval_at_minus_k(const PAdicSpec& pspec, const MultiIndex& k, long target_m) {
    if (static_cast<int>(k.size()) != pspec.spec().num_bases())
        throw std::invalid_argument("zp_r_eval_at_minus_k: k must have length T");
    std::vector<PAdic> s;
    s.reserve(k.size());
    for (std::size_t t = 0; t < k.size(); ++t)
        s.push_back(PAdic::from_integer(-static_cast<long>(k[t]), pspec.context().p,
                                        pspec.context().precision));
    return zp_r_eval(pspec, s, target_m);
}

}  // namespace tzeta
