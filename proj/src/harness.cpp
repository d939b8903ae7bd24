#include "grmod/harness.hpp"

#include <algorithm>

namespace grmod {

static int g_hilbert_window = 0;

int hilbert_window_override() { return g_hilbert_window; }
void set_hilbert_window_override(int d) { g_hilbert_window = d; }

std::string verdict_str(CheckVerdict v) {
    switch (v) {
    case CheckVerdict::Pass: return "Pass";
    case CheckVerdict::Evidence: return "Evidence";
    case CheckVerdict::Fail: return "Fail";
    case CheckVerdict::Skipped: return "Skipped";
    }
    return "?";
}

namespace {

// Folds ingredient certificates into one verdict.  Bounded evidence caps a
// Pass at Evidence; a false conclusion is Fail regardless of certificates.
struct Acc {
    CheckVerdict v = CheckVerdict::Pass;
    CertStatus st = CertStatus::certified();
    std::string witness;
    int hb = 0;

    void weaken(const CertStatus& s) {
        st = weakest(st, s);
        if (v == CheckVerdict::Pass && s.kind == CertKind::BoundedEvidence)
            v = CheckVerdict::Evidence;
    }
    void hilbert(int d) {
        hb = std::max(hb, d);
        if (v == CheckVerdict::Pass) v = CheckVerdict::Evidence;
    }
    void fail(const std::string& w) {
        if (v != CheckVerdict::Fail) witness = w;
        v = CheckVerdict::Fail;
    }
    void require(bool cond, const std::string& w) {
        if (!cond) fail(w);
    }
    CheckResult result(const std::string& id) const {
        return {id, v, st, witness, hb};
    }
};

CheckResult skip(const std::string& id, const std::string& why) {
    return {id, CheckVerdict::Skipped, CertStatus::certified(),
            "hypothesis: " + why, 0};
}

// A hypothesis or one-sided condition: whether it holds, how firmly, and
// what broke when it does not.
struct Gate {
    bool ok = false;
    CertStatus st;
    std::string why;
};

Gate reduced_perfect_dim(const Presentation& M, const Dualizer& C, int n,
                         int bound) {
    if (M.is_zero_module())
        return {false, CertStatus::certified(), "module is zero"};
    CertXInt rg = reduced_grade(M, C, bound);
    CertXInt gd = gc_dimension(M, C, bound);
    CertStatus st = weakest(rg.status, gd.status);
    if (!(rg.value == XInt::of(n)))
        return {false, st,
                "reduced grade " + rg.value.str() + " != " +
                    std::to_string(n)};
    if (!(gd.value == XInt::of(n)))
        return {false, st,
                "G_C-dimension " + gd.value.str() + " != " +
                    std::to_string(n)};
    return {true, st, ""};
}

Gate perfect_dim(const Presentation& M, const Dualizer& C, int n,
                 int bound) {
    if (M.is_zero_module())
        return {false, CertStatus::certified(), "module is zero"};
    CertXInt g = grade_value(M);
    CertXInt gd = gc_dimension(M, C, bound);
    CertStatus st = weakest(g.status, gd.status);
    if (!(g.value == XInt::of(n)))
        return {false, st,
                "grade " + g.value.str() + " != " + std::to_string(n)};
    if (!(gd.value == XInt::of(n)))
        return {false, st,
                "G_C-dimension " + gd.value.str() + " != " +
                    std::to_string(n)};
    return {true, st, ""};
}

void eq_xint(Acc& acc, const CertXInt& a, const CertXInt& b,
             const std::string& label) {
    acc.weaken(a.status);
    acc.weaken(b.status);
    acc.require(a.value == b.value,
                label + ": " + a.value.str() + " != " + b.value.str());
}

void ge_xint(Acc& acc, const CertXInt& a, int c, const std::string& label) {
    acc.weaken(a.status);
    acc.require(a.value >= c,
                label + ": " + a.value.str() + " < " + std::to_string(c));
}

void hf_match(Acc& acc, const Presentation& a, const Presentation& b,
              const std::string& label) {
    int d = hilbert_window_override()
                ? hilbert_window_override()
                : std::max(hilbert_default_bound(a), hilbert_default_bound(b));
    acc.hilbert(d);
    acc.require(hilbert_values(a, -d, d) == hilbert_values(b, -d, d),
                label + ": Hilbert functions differ");
}

int scan_bound(const CheckRequest& req) {
    return req.bound > 0 ? req.bound : default_ext_bound(req.M.ring());
}

// gcdim M + gcdim Tr_C M = gcdim Ext^n(M, C) + 1 for reduced G_C-perfect M
// of dimension n.
CheckResult thm_gcdim_sum(const CheckRequest& req) {
    const std::string id = "thm-gcdim-sum";
    int b = scan_bound(req);
    Gate h = reduced_perfect_dim(req.M, req.C, req.n, b);
    if (!h.ok) return skip(id, h.why);
    Acc acc;
    acc.weaken(h.st);
    CertXInt gm = gc_dimension(req.M, req.C, b);
    CertXInt gt = gc_dimension(transpose(req.M, req.C), req.C, b);
    CertXInt ge =
        gc_dimension(ext_module(req.M, req.C.C, req.n), req.C, b);
    eq_xint(acc, {gm.value + gt.value, weakest(gm.status, gt.status)},
            {ge.value + 1, ge.status},
            "G-dim M + G-dim transpose != G-dim Ext^n + 1");
    return acc.result(id);
}

// Ext^i(Tr_C M, C) and Ext^{i+n-1}(Ext^n(M, C), C) agree degreewise.
CheckResult prop_ext_trc(const CheckRequest& req) {
    const std::string id = "prop-ext-trc";
    int b = scan_bound(req);
    Gate h = reduced_perfect_dim(req.M, req.C, req.n, b);
    if (!h.ok) return skip(id, h.why);
    Acc acc;
    acc.weaken(h.st);
    Presentation tr = transpose(req.M, req.C);
    Presentation e = ext_module(req.M, req.C.C, req.n);
    for (int i = 1; i <= req.range; ++i)
        hf_match(acc, ext_module(tr, req.C.C, i),
                 ext_module(e, req.C.C, i + req.n - 1),
                 "Ext^" + std::to_string(i) + " of the transpose");
    return acc.result(id);
}

// With Tor_1(Tr M, C) = 0, Ext^i(lambda M tensor C, C) agrees with
// Ext^{i+n}(Ext^n(M, C), C) degreewise.
CheckResult cor_lambda_ext(const CheckRequest& req) {
    const std::string id = "cor-lambda-ext";
    int b = scan_bound(req);
    Gate h = reduced_perfect_dim(req.M, req.C, req.n, b);
    if (!h.ok) return skip(id, h.why);
    Presentation trr = transpose(req.M, ring_dualizer(req.M.ring()));
    if (!tor_module(trr, req.C.C, 1).is_zero_module())
        return skip(id, "Tor_1(transpose, C) != 0");
    Acc acc;
    acc.weaken(h.st);
    Presentation lc = minimal_presentation(
        tensor_product(lambda_module(req.M), req.C.C));
    Presentation e = ext_module(req.M, req.C.C, req.n);
    for (int i = 1; i <= req.range; ++i)
        hf_match(acc, ext_module(lc, req.C.C, i),
                 ext_module(e, req.C.C, i + req.n),
                 "Ext^" + std::to_string(i) + " of lambda tensor C");
    return acc.result(id);
}

// depth M + depth Tr_C M = depth R + depth Ext^n(M, C) - 1 when the C-dual
// also has finite G_C-dimension.
CheckResult cor_depth_sum(const CheckRequest& req) {
    const std::string id = "cor-depth-sum";
    int b = scan_bound(req);
    Gate h = reduced_perfect_dim(req.M, req.C, req.n, b);
    if (!h.ok) return skip(id, h.why);
    Acc acc;
    acc.weaken(h.st);
    Presentation dual = dual_module(req.M, req.C);
    if (!dual.is_zero_module()) {
        CertXInt gd = gc_dimension(dual, req.C, b);
        if (!gd.value.finite)
            return skip(id, "G_C-dimension of the C-dual is not finite");
        acc.weaken(gd.status);
    }
    Presentation tr = transpose(req.M, req.C);
    Presentation e = ext_module(req.M, req.C.C, req.n);
    int lhs = depth(req.M) + depth(tr);
    int rhs = ring_depth(req.M.ring()) + depth(e) - 1;
    acc.require(lhs == rhs,
                "depth M + depth transpose = " + std::to_string(lhs) +
                    ", depth R + depth Ext^n - 1 = " + std::to_string(rhs));
    return acc.result(id);
}

// depth lambda M = n + depth Ext^n(M, C) over a Cohen-Macaulay ring when
// the R-dual of M has finite projective dimension.
CheckResult cor_lambda_depth(const CheckRequest& req) {
    const std::string id = "cor-lambda-depth";
    const RingPtr& R = req.M.ring();
    if (!is_cohen_macaulay(R)) return skip(id, "ring is not Cohen-Macaulay");
    int b = scan_bound(req);
    Gate h = reduced_perfect_dim(req.M, req.C, req.n, b);
    if (!h.ok) return skip(id, h.why);
    Acc acc;
    acc.weaken(h.st);
    Presentation dual = dual_module(req.M, req.C);
    if (!dual.is_zero_module()) {
        CertXInt gd = gc_dimension(dual, req.C, b);
        if (!gd.value.finite)
            return skip(id, "G_C-dimension of the C-dual is not finite");
        acc.weaken(gd.status);
    }
    Presentation mstar = dual_module(req.M, ring_dualizer(R));
    if (!mstar.is_zero_module() && !finite_pd(mstar, b).has_value())
        return skip(id, "projective dimension of the R-dual exceeds " +
                            std::to_string(b));
    Presentation l = lambda_module(req.M);
    if (l.is_zero_module()) return skip(id, "lambda module is zero");
    Presentation e = ext_module(req.M, req.C.C, req.n);
    int lhs = depth(l);
    int rhs = req.n + depth(e);
    acc.require(lhs == rhs,
                "depth lambda M = " + std::to_string(lhs) +
                    ", n + depth Ext^n = " + std::to_string(rhs));
    return acc.result(id);
}

// grade Ext^i(M, C) >= i for finite G_C-dimension, >= i + 1 when M is
// horizontally linked.
CheckResult prop_grade_lb(const CheckRequest& req) {
    const std::string id = "prop-grade-lb";
    if (req.M.is_zero_module()) return skip(id, "module is zero");
    int b = scan_bound(req);
    CertXInt gd = gc_dimension(req.M, req.C, b);
    if (!gd.value.finite)
        return skip(id, "G_C-dimension is not finite");
    Acc acc;
    acc.weaken(gd.status);
    Verdict hl = horizontally_linked(req.M);
    acc.weaken(hl.status);
    int extra = hl.holds ? 1 : 0;
    for (int i = 1; i <= req.range; ++i) {
        Presentation e = ext_module(req.M, req.C.C, i);
        if (e.is_zero_module()) continue;
        ge_xint(acc, grade_value(e), i + extra,
                "grade Ext^" + std::to_string(i));
    }
    return acc.result(id);
}

// r.grade M + r.grade Tr_C M = grade Ext^n(M, C) + 1 for reduced
// G_C-perfect M of dimension n.
CheckResult prop_rgrade_sum(const CheckRequest& req) {
    const std::string id = "prop-rgrade-sum";
    int b = scan_bound(req);
    Gate h = reduced_perfect_dim(req.M, req.C, req.n, b);
    if (!h.ok) return skip(id, h.why);
    Acc acc;
    acc.weaken(h.st);
    CertXInt a1 = reduced_grade(req.M, req.C, b);
    CertXInt a2 = reduced_grade(transpose(req.M, req.C), req.C, b);
    CertXInt g = grade_value(ext_module(req.M, req.C.C, req.n));
    eq_xint(acc, {a1.value + a2.value, weakest(a1.status, a2.status)},
            {g.value + 1, g.status},
            "r.grade M + r.grade transpose != grade Ext^n + 1");
    return acc.result(id);
}

// r.grade(Omega^k M, C) = r.grade(M, C) - k while the shift stays positive.
CheckResult lemma_rgrade_shift(const CheckRequest& req) {
    const std::string id = "lemma-rgrade-shift";
    if (req.M.is_zero_module()) return skip(id, "module is zero");
    int b = scan_bound(req);
    CertXInt rg = reduced_grade(req.M, req.C, b);
    if (!(rg.value >= req.k + 1))
        return skip(id, "reduced grade " + rg.value.str() +
                            " <= " + std::to_string(req.k));
    Acc acc;
    acc.weaken(rg.status);
    CertXInt rs = reduced_grade(syzygy_module(req.M, req.k), req.C, b);
    eq_xint(acc, rs, {rg.value + (-req.k), rg.status},
            "r.grade of the syzygy != r.grade - k");
    return acc.result(id);
}

// T_n over a module of grade >= n is reduced G_C-perfect of dimension n;
// strict inequality makes it non-G_C-perfect of grade zero.
CheckResult ex_tnc_construct(const CheckRequest& req) {
    const std::string id = "ex-tnc-construct";
    if (req.M.is_zero_module()) return skip(id, "module is zero");
    int b = scan_bound(req);
    CertXInt g = grade_value(req.M);
    if (!(g.value >= req.n))
        return skip(id, "grade " + g.value.str() + " < " +
                            std::to_string(req.n));
    Acc acc;
    acc.weaken(g.status);
    Presentation t = iterated_transpose(req.M, req.C, req.n);
    if (t.is_zero_module()) {
        acc.fail("T_n is the zero module");
        return acc.result(id);
    }
    CertXInt rg = reduced_grade(t, req.C, b);
    CertXInt gd = gc_dimension(t, req.C, b);
    acc.weaken(rg.status);
    acc.weaken(gd.status);
    acc.require(rg.value == XInt::of(req.n),
                "reduced grade of T_n is " + rg.value.str());
    acc.require(gd.value == XInt::of(req.n),
                "G_C-dimension of T_n is " + gd.value.str());
    if (g.value >= req.n + 1) {
        Verdict p = gc_perfect(t, req.C, b);
        acc.weaken(p.status);
        acc.require(!p.holds, "T_n is G_C-perfect despite grade M > n");
        CertXInt gt = grade_value(t);
        acc.weaken(gt.status);
        acc.require(gt.value == XInt::of(0),
                    "grade of T_n is " + gt.value.str());
    }
    return acc.result(id);
}

// The two-sided condition demanding reduced G_C-perfection of M together
// with G_C-perfection of Ext^n holds on the M side iff it holds on the
// transpose side.
CheckResult thm_transpose_equiv(const CheckRequest& req) {
    const std::string id = "thm-transpose-equiv";
    if (req.M.is_zero_module()) return skip(id, "module is zero");
    int b = scan_bound(req);
    int m = req.n + req.t - 1;
    Gate pi1 = reduced_perfect_dim(req.M, req.C, req.n, b);
    Gate pi2 =
        perfect_dim(ext_module(req.M, req.C.C, req.n), req.C, m, b);
    Presentation tr = transpose(req.M, req.C);
    Gate pj1 = reduced_perfect_dim(tr, req.C, req.t, b);
    Gate pj2 = perfect_dim(ext_module(tr, req.C.C, req.t), req.C, m, b);
    Acc acc;
    acc.weaken(pi1.st);
    acc.weaken(pi2.st);
    acc.weaken(pj1.st);
    acc.weaken(pj2.st);
    bool pi = pi1.ok && pi2.ok;
    bool pj = pj1.ok && pj2.ok;
    acc.require(pi == pj,
                std::string("M side ") + (pi ? "holds" : "fails") +
                    ", transpose side " + (pj ? "holds" : "fails"));
    return acc.result(id);
}

// When the M side of the transpose equivalence holds with t > 2, the C-dual
// is reduced G_C-perfect of dimension t - 2 with G_C-perfect Ext^{t-2}.
CheckResult cor_dual_reduced(const CheckRequest& req) {
    const std::string id = "cor-dual-reduced";
    if (req.M.is_zero_module()) return skip(id, "module is zero");
    if (req.t <= 2) return skip(id, "requires t > 2");
    int b = scan_bound(req);
    int m = req.n + req.t - 1;
    Gate h1 = reduced_perfect_dim(req.M, req.C, req.n, b);
    if (!h1.ok) return skip(id, h1.why);
    Gate h2 = perfect_dim(ext_module(req.M, req.C.C, req.n), req.C, m, b);
    if (!h2.ok) return skip(id, "Ext^n(M, C): " + h2.why);
    Acc acc;
    acc.weaken(h1.st);
    acc.weaken(h2.st);
    Presentation d = dual_module(req.M, req.C);
    if (d.is_zero_module()) {
        acc.fail("the C-dual is zero");
        return acc.result(id);
    }
    Gate c1 = reduced_perfect_dim(d, req.C, req.t - 2, b);
    acc.weaken(c1.st);
    acc.require(c1.ok, "C-dual: " + c1.why);
    Gate c2 = perfect_dim(ext_module(d, req.C.C, req.t - 2), req.C, m, b);
    acc.weaken(c2.st);
    acc.require(c2.ok, "Ext^{t-2} of the C-dual: " + c2.why);
    return acc.result(id);
}

// For stable reduced G_C-perfect M with lambda M in the Auslander class:
// horizontal linkage, grade Ext^n >= n + 1, and grade Ext^i >= i + 1 for
// all i are equivalent.
CheckResult thm_linkage_numeric(const CheckRequest& req) {
    const std::string id = "thm-linkage-numeric";
    if (req.M.is_zero_module()) return skip(id, "module is zero");
    if (!is_stable(req.M))
        return skip(id, "module has a free direct summand");
    int b = scan_bound(req);
    Gate h = reduced_perfect_dim(req.M, req.C, req.n, b);
    if (!h.ok) return skip(id, h.why);
    Presentation l = lambda_module(req.M);
    if (l.is_zero_module()) return skip(id, "lambda module is zero");
    Verdict a = auslander_class(l, req.C, b);
    if (!a.holds)
        return skip(id, "lambda M is not in the Auslander class: " +
                            a.witness);
    Acc acc;
    acc.weaken(h.st);
    acc.weaken(a.status);
    Verdict hl = horizontally_linked(req.M);
    acc.weaken(hl.status);
    CertXInt gn = grade_value(ext_module(req.M, req.C.C, req.n));
    acc.weaken(gn.status);
    bool b1 = hl.holds;
    bool b2 = gn.value >= req.n + 1;
    bool b3 = true;
    for (int i = 1; i <= req.range; ++i) {
        Presentation e = ext_module(req.M, req.C.C, i);
        if (e.is_zero_module()) continue;
        CertXInt gi = grade_value(e);
        acc.weaken(gi.status);
        if (!(gi.value >= i + 1)) b3 = false;
    }
    acc.require(b1 == b2, std::string("linked = ") + (b1 ? "yes" : "no") +
                              " but grade Ext^n >= n+1 = " +
                              (b2 ? "yes" : "no"));
    acc.require(b2 == b3, std::string("grade Ext^n >= n+1 = ") +
                              (b2 ? "yes" : "no") +
                              " but the family bound = " +
                              (b3 ? "yes" : "no"));
    return acc.result(id);
}

// A stable module of G_C-dimension zero with lambda M in the Auslander
// class is horizontally linked, with lambda M stable and
// lambda M tensor C again of G_C-dimension zero.
CheckResult thm_link_stable(const CheckRequest& req) {
    const std::string id = "thm-link-stable";
    if (req.M.is_zero_module()) return skip(id, "module is zero");
    if (!is_stable(req.M))
        return skip(id, "module has a free direct summand");
    int b = scan_bound(req);
    CertXInt gd = gc_dimension(req.M, req.C, b);
    if (!(gd.value == XInt::of(0)))
        return skip(id, "G_C-dimension " + gd.value.str() + " != 0");
    Presentation l = lambda_module(req.M);
    if (l.is_zero_module()) return skip(id, "lambda module is zero");
    Verdict a = auslander_class(l, req.C, b);
    if (!a.holds)
        return skip(id, "lambda M is not in the Auslander class: " +
                            a.witness);
    Acc acc;
    acc.weaken(gd.status);
    acc.weaken(a.status);
    Verdict hl = horizontally_linked(req.M);
    acc.weaken(hl.status);
    acc.require(hl.holds, "not horizontally linked");
    acc.require(is_stable(l), "lambda M has a free direct summand");
    Presentation lc =
        minimal_presentation(tensor_product(l, req.C.C));
    if (lc.is_zero_module()) {
        acc.fail("lambda M tensor C is zero");
        return acc.result(id);
    }
    CertXInt g2 = gc_dimension(lc, req.C, b);
    acc.weaken(g2.status);
    acc.require(g2.value == XInt::of(0),
                "G_C-dimension of lambda M tensor C is " + g2.value.str());
    return acc.result(id);
}

// C-k-torsionless iff grade Ext^n(M, C) >= n + k, for reduced G_C-perfect
// M of dimension n.
CheckResult prop_ck_tors(const CheckRequest& req) {
    const std::string id = "prop-ck-tors";
    int b = scan_bound(req);
    Gate h = reduced_perfect_dim(req.M, req.C, req.n, b);
    if (!h.ok) return skip(id, h.why);
    Acc acc;
    acc.weaken(h.st);
    Verdict ck = c_k_torsionless(req.M, req.C, req.k);
    acc.weaken(ck.status);
    CertXInt g = grade_value(ext_module(req.M, req.C.C, req.n));
    acc.weaken(g.status);
    bool rhs = g.value >= req.n + req.k;
    acc.require(ck.holds == rhs,
                std::string("C-k-torsionless = ") +
                    (ck.holds ? "yes" : "no") + " but grade Ext^n = " +
                    g.value.str());
    return acc.result(id);
}

// T_n over a module of grade >= n + k is C-k-torsionless and reduced
// G_C-perfect of dimension n.
CheckResult ex_ck_family(const CheckRequest& req) {
    const std::string id = "ex-ck-family";
    if (req.M.is_zero_module()) return skip(id, "module is zero");
    int b = scan_bound(req);
    CertXInt g = grade_value(req.M);
    if (!(g.value >= req.n + req.k))
        return skip(id, "grade " + g.value.str() + " < " +
                            std::to_string(req.n + req.k));
    Acc acc;
    acc.weaken(g.status);
    Presentation t = iterated_transpose(req.M, req.C, req.n);
    if (t.is_zero_module()) {
        acc.fail("T_n is the zero module");
        return acc.result(id);
    }
    Verdict ck = c_k_torsionless(t, req.C, req.k);
    acc.weaken(ck.status);
    acc.require(ck.holds, "T_n is not C-k-torsionless: " + ck.witness);
    Gate rp = reduced_perfect_dim(t, req.C, req.n, b);
    acc.weaken(rp.st);
    acc.require(rp.ok, "T_n: " + rp.why);
    return acc.result(id);
}

// Under the linkage hypotheses, horizontal linkage, C-1-torsionlessness,
// and being a C-syzygy coincide.
CheckResult cor_syzygy_equiv(const CheckRequest& req) {
    const std::string id = "cor-syzygy-equiv";
    if (req.M.is_zero_module()) return skip(id, "module is zero");
    if (!is_stable(req.M))
        return skip(id, "module has a free direct summand");
    int b = scan_bound(req);
    Gate h = reduced_perfect_dim(req.M, req.C, req.n, b);
    if (!h.ok) return skip(id, h.why);
    Presentation l = lambda_module(req.M);
    if (l.is_zero_module()) return skip(id, "lambda module is zero");
    Verdict a = auslander_class(l, req.C, b);
    if (!a.holds)
        return skip(id, "lambda M is not in the Auslander class: " +
                            a.witness);
    Acc acc;
    acc.weaken(h.st);
    acc.weaken(a.status);
    Verdict hl = horizontally_linked(req.M);
    Verdict ck = c_k_torsionless(req.M, req.C, 1);
    Verdict sy = is_c_syzygy(req.M, req.C);
    acc.weaken(hl.status);
    acc.weaken(ck.status);
    acc.weaken(sy.status);
    acc.require(hl.holds == ck.holds,
                std::string("linked = ") + (hl.holds ? "yes" : "no") +
                    " but C-1-torsionless = " + (ck.holds ? "yes" : "no"));
    acc.require(ck.holds == sy.holds,
                std::string("C-1-torsionless = ") +
                    (ck.holds ? "yes" : "no") + " but C-syzygy = " +
                    (sy.holds ? "yes" : "no"));
    return acc.result(id);
}

using CheckFn = CheckResult (*)(const CheckRequest&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"cor-depth-sum", cor_depth_sum},
        {"cor-dual-reduced", cor_dual_reduced},
        {"cor-lambda-depth", cor_lambda_depth},
        {"cor-lambda-ext", cor_lambda_ext},
        {"cor-syzygy-equiv", cor_syzygy_equiv},
        {"ex-ck-family", ex_ck_family},
        {"ex-tnc-construct", ex_tnc_construct},
        {"lemma-rgrade-shift", lemma_rgrade_shift},
        {"prop-ck-tors", prop_ck_tors},
        {"prop-ext-trc", prop_ext_trc},
        {"prop-grade-lb", prop_grade_lb},
        {"prop-rgrade-sum", prop_rgrade_sum},
        {"thm-gcdim-sum", thm_gcdim_sum},
        {"thm-link-stable", thm_link_stable},
        {"thm-linkage-numeric", thm_linkage_numeric},
        {"thm-transpose-equiv", thm_transpose_equiv},
    };
    return table;
}

} // namespace

std::vector<std::string> harness_check_ids() {
    std::vector<std::string> ids;
    for (auto& e : registry()) ids.push_back(e.first);
    return ids;
}

bool harness_has_check(const std::string& id) {
    for (auto& e : registry())
        if (e.first == id) return true;
    return false;
}

CheckResult run_check(const std::string& id, const CheckRequest& req) {
    for (auto& e : registry())
        if (e.first == id) return e.second(req);
    throw std::invalid_argument("unknown check id: " + id);
}

} // namespace grmod
