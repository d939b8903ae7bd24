#include "grmod/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace grmod {

std::string hex16(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

PolyContext::PolyContext(uint32_t p, std::vector<std::string> vars,
                         std::vector<int> weights, OrderKind order)
    : field_(p), vars_(std::move(vars)), weights_(std::move(weights)),
      order_(order) {
    if (weights_.empty()) weights_.assign(vars_.size(), 1);
    if (weights_.size() != vars_.size())
        throw std::invalid_argument("weight count does not match variables");
    for (int w : weights_)
        if (w <= 0) throw std::invalid_argument("weights must be positive");
    for (size_t i = 0; i < vars_.size(); ++i)
        for (size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw std::invalid_argument("duplicate variable " + vars_[i]);
}

int PolyContext::cmp(const Monomial& a, const Monomial& b) const {
    switch (order_) {
    case OrderKind::Lex:
        for (int i = 0; i < nvars(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    case OrderKind::DegLex: {
        int da = degree(a), db = degree(b);
        if (da != db) return da > db ? 1 : -1;
        for (int i = 0; i < nvars(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    case OrderKind::DegRevLex:
    default: {
        int da = degree(a), db = degree(b);
        if (da != db) return da > db ? 1 : -1;
        for (int i = nvars() - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }
    }
}

int PolyContext::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[i] == name) return i;
    return -1;
}

std::string PolyContext::mono_string(const Monomial& m) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars(); ++i) {
        if (!m[i]) continue;
        if (!first) os << "*";
        os << vars_[i];
        if (m[i] > 1) os << "^" << m[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

uint64_t PolyContext::hash() const {
    Fnv1a h;
    h.u32(field_.p());
    for (const auto& v : vars_) h.str(v);
    for (int w : weights_) h.i32(w);
    h.i32(static_cast<int>(order_));
    return h.value();
}

ContextPtr make_context(uint32_t p, std::vector<std::string> vars,
                        std::vector<int> weights, OrderKind order) {
    return std::make_shared<PolyContext>(p, std::move(vars), std::move(weights),
                                         order);
}

std::string order_name(OrderKind k) {
    switch (k) {
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::Lex: return "lex";
    }
    return "?";
}

Poly Poly::zero(ContextPtr ctx) {
    Poly p;
    p.ctx_ = std::move(ctx);
    return p;
}

Poly Poly::constant(ContextPtr ctx, int64_t c) {
    uint32_t r = ctx->field().reduce(c);
    Poly p;
    p.ctx_ = ctx;
    if (r) p.terms_.push_back({mono_one(ctx->nvars()), r});
    return p;
}

Poly Poly::variable(ContextPtr ctx, int i) {
    GRMOD_CHECK(i >= 0 && i < ctx->nvars(), "variable index out of range");
    Monomial m = mono_one(ctx->nvars());
    m[i] = 1;
    Poly p;
    p.ctx_ = std::move(ctx);
    p.terms_.push_back({std::move(m), 1});
    return p;
}

Poly Poly::term(ContextPtr ctx, Monomial m, int64_t c) {
    uint32_t r = ctx->field().reduce(c);
    Poly p;
    p.ctx_ = std::move(ctx);
    if (r) p.terms_.push_back({std::move(m), r});
    return p;
}

const Term& Poly::leading() const {
    GRMOD_CHECK(!terms_.empty(), "leading term of zero");
    return terms_.front();
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_[0].mono));
}

std::optional<uint32_t> Poly::as_constant() const {
    if (terms_.empty()) return 0u;
    if (terms_.size() == 1 && mono_is_one(terms_[0].mono))
        return terms_[0].coeff;
    return std::nullopt;
}

int Poly::degree() const { return ctx_->degree(leading().mono); }

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = ctx_->degree(terms_[0].mono);
    for (const auto& t : terms_)
        if (ctx_->degree(t.mono) != d) return false;
    return true;
}

Poly Poly::operator+(const Poly& o) const {
    GRMOD_CHECK(ctx_ && o.ctx_, "arithmetic on null polynomial");
    GRMOD_CHECK(ctx_.get() == o.ctx_.get(), "mixed polynomial contexts");
    const auto& F = ctx_->field();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ctx_->cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            uint32_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s) out.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Poly r;
    r.ctx_ = ctx_;
    r.terms_ = std::move(out);
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = ctx_->field().neg(t.coeff);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    GRMOD_CHECK(ctx_ && o.ctx_, "arithmetic on null polynomial");
    GRMOD_CHECK(ctx_.get() == o.ctx_.get(), "mixed polynomial contexts");
    const auto& F = ctx_->field();
    auto desc = [this](const Monomial& a, const Monomial& b) {
        return ctx_->cmp(a, b) > 0;
    };
    std::map<Monomial, uint32_t, decltype(desc)> acc(desc);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = grmod::mono_mul(a.mono, b.mono);
            uint32_t c = F.mul(a.coeff, b.coeff);
            auto it = acc.find(m);
            if (it == acc.end()) {
                if (c) acc.emplace(std::move(m), c);
            } else {
                it->second = F.add(it->second, c);
                if (!it->second) acc.erase(it);
            }
        }
    Poly r;
    r.ctx_ = ctx_;
    r.terms_.reserve(acc.size());
    for (auto& kv : acc) r.terms_.push_back({kv.first, kv.second});
    return r;
}

Poly Poly::scaled(uint32_t c) const {
    const auto& F = ctx_->field();
    uint32_t cc = c % F.p();
    if (!cc) return Poly::zero(ctx_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, cc);
    return r;
}

Poly Poly::mono_mul(const Monomial& m, uint32_t c) const {
    const auto& F = ctx_->field();
    uint32_t cc = c % F.p();
    if (!cc) return Poly::zero(ctx_);
    Poly r;
    r.ctx_ = ctx_;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({grmod::mono_mul(t.mono, m), F.mul(t.coeff, cc)});
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff ||
            terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << "+";
        bool unit = mono_is_one(t.mono);
        if (t.coeff != 1 || unit) {
            os << t.coeff;
            if (!unit) os << "*";
        }
        if (!unit) os << ctx_->mono_string(t.mono);
        first = false;
    }
    return os.str();
}

void Poly::feed_hash(Fnv1a& h) const {
    h.u64(terms_.size());
    for (const auto& t : terms_) {
        h.u32(t.coeff);
        for (int e : t.mono) h.i32(e);
    }
}

void Poly::validate() const {
    GRMOD_CHECK(ctx_ != nullptr, "null polynomial");
    for (const auto& t : terms_) {
        GRMOD_CHECK(t.coeff > 0 && t.coeff < ctx_->field().p(),
                    "coefficient out of range");
        GRMOD_CHECK(static_cast<int>(t.mono.size()) == ctx_->nvars(),
                    "monomial arity mismatch");
        for (int e : t.mono) GRMOD_CHECK(e >= 0, "negative exponent");
    }
    for (size_t i = 0; i + 1 < terms_.size(); ++i)
        GRMOD_CHECK(ctx_->cmp(terms_[i].mono, terms_[i + 1].mono) > 0,
                    "terms not strictly descending");
}

Poly poly_from_sorted(ContextPtr ctx, std::vector<Term> terms) {
    Poly p;
    p.ctx_ = std::move(ctx);
    p.terms_ = std::move(terms);
    p.validate();
    return p;
}

Poly poly_from_terms(ContextPtr ctx, const std::vector<Term>& terms) {
    Poly acc = Poly::zero(ctx);
    for (const auto& t : terms)
        acc = acc + Poly::term(ctx, t.mono, t.coeff);
    return acc;
}

} // namespace grmod
