#include "findom/kupisch.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace findom {

namespace {

/// dim A e_j = number of nonzero paths ending at vertex j. A path of length
/// t into j starts at j-t and is nonzero iff c_{j-t} >= t+1; the valid t form
/// an initial segment.
std::uint32_t left_projective_dim(const KupischSeries& s, std::size_t j) {
    std::uint32_t d = 1;
    for (std::uint32_t t = 1;; ++t) {
        if (!s.cyclic() && t > j)
            break;
        std::size_t src = s.vertex(static_cast<long long>(j) - t);
        if (s.entry(src) < t + 1)
            break;
        ++d;
    }
    return d;
}

std::size_t opposite_relabel(const KupischSeries& s, std::size_t j) {
    if (s.cyclic())
        return s.vertex(-static_cast<long long>(j));
    return s.n() - 1 - j;
}

struct OppositeMap {
    KupischSeries series;
    // raw-to-canonical rotation offset (cyclic only)
    std::size_t rotation;
};

OppositeMap opposite_with_map(const KupischSeries& s) {
    const std::size_t n = s.n();
    std::vector<std::uint32_t> raw(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t j = s.cyclic() ? s.vertex(-static_cast<long long>(k)) : (n - 1 - k);
        raw[k] = left_projective_dim(s, j);
    }
    if (!s.cyclic())
        return {KupischSeries(SeriesKind::Linear, raw), 0};
    std::vector<std::uint32_t> canon = minimal_rotation(raw);
    std::size_t rot = 0;
    for (std::size_t r = 0; r < n; ++r) {
        bool match = true;
        for (std::size_t k = 0; k < n && match; ++k)
            match = raw[(k + r) % n] == canon[k];
        if (match) {
            rot = r;
            break;
        }
    }
    return {KupischSeries(SeriesKind::Cyclic, canon), rot};
}

} // namespace

void validate(SeriesKind kind, const std::vector<std::uint32_t>& c) {
    const std::size_t n = c.size();
    if (n == 0)
        throw ViolatedKupischCondition("empty Kupisch series", 0);
    if (kind == SeriesKind::Linear) {
        if (c[n - 1] != 1)
            throw ViolatedKupischCondition("linear series must end with 1 (entry " +
                                               std::to_string(n) + " is " +
                                               std::to_string(c[n - 1]) + ")",
                                           n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (c[i] < 2)
                throw ViolatedKupischCondition(
                    "entry " + std::to_string(i + 1) + " < 2 gives a disconnected algebra", i);
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (c[i + 1] + 1 < c[i])
                throw ViolatedKupischCondition("entry " + std::to_string(i + 2) + " = " +
                                                   std::to_string(c[i + 1]) + " < " +
                                                   std::to_string(c[i]) + " - 1",
                                               i + 1);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            if (c[i] < 2)
                throw ViolatedKupischCondition(
                    "cyclic series entry " + std::to_string(i + 1) + " < 2", i);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t nx = (i + 1) % n;
            if (c[nx] + 1 < c[i])
                throw ViolatedKupischCondition("entry " + std::to_string(nx + 1) + " = " +
                                                   std::to_string(c[nx]) + " < " +
                                                   std::to_string(c[i]) + " - 1",
                                               nx);
        }
    }
}

KupischSeries::KupischSeries(SeriesKind kind, std::vector<std::uint32_t> entries)
    : kind_(kind), c_(std::move(entries)) {
    validate(kind_, c_);
}

std::size_t KupischSeries::algebra_dim() const {
    return std::accumulate(c_.begin(), c_.end(), std::size_t{0});
}

std::string KupischSeries::str() const {
    std::ostringstream os;
    os << (cyclic() ? "cyclic [" : "linear [");
    for (std::size_t i = 0; i < c_.size(); ++i)
        os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
}

bool is_projective(const KupischSeries& s, Interval m) { return m.len == s.entry(m.top); }

std::size_t socle_vertex(const KupischSeries& s, Interval m) {
    return s.vertex(static_cast<long long>(m.top) + m.len - 1);
}

bool is_injective(const KupischSeries& s, Interval m) {
    return left_projective_dim(s, socle_vertex(s, m)) == m.len;
}

std::vector<Interval> projective_intervals(const KupischSeries& s) {
    std::vector<Interval> v;
    for (std::size_t i = 0; i < s.n(); ++i)
        v.push_back({i, s.entry(i)});
    return v;
}

std::vector<Interval> injective_intervals(const KupischSeries& s) {
    std::vector<Interval> v;
    for (std::size_t j = 0; j < s.n(); ++j) {
        std::uint32_t d = left_projective_dim(s, j);
        v.push_back({s.vertex(static_cast<long long>(j) - d + 1), d});
    }
    return v;
}

std::vector<Interval> all_intervals(const KupischSeries& s) {
    std::vector<Interval> v;
    for (std::size_t i = 0; i < s.n(); ++i)
        for (std::uint32_t l = 1; l <= s.entry(i); ++l)
            v.push_back({i, l});
    return v;
}

std::optional<Interval> syzygy(const KupischSeries& s, Interval m) {
    std::uint32_t c = s.entry(m.top);
    if (m.len == c)
        return std::nullopt;
    return Interval{s.vertex(static_cast<long long>(m.top) + m.len), c - m.len};
}

std::optional<Interval> cosyzygy(const KupischSeries& s, Interval m) {
    std::size_t soc = socle_vertex(s, m);
    std::uint32_t d = left_projective_dim(s, soc);
    if (d == m.len)
        return std::nullopt;
    // cokernel of m into its envelope I_soc = M(soc-d+1, d)
    return Interval{s.vertex(static_cast<long long>(m.top) + m.len - d), d - m.len};
}

namespace {

ExtNat iterate_dim(const KupischSeries& s, Interval m,
                   const std::function<std::optional<Interval>(Interval)>& step) {
    std::set<Interval> seen;
    Interval cur = m;
    std::uint32_t k = 0;
    for (;;) {
        std::optional<Interval> next = step(cur);
        if (!next)
            return ExtNat::finite(k);
        if (!seen.insert(cur).second)
            return ExtNat::infinite();
        cur = *next;
        ++k;
    }
}

} // namespace

ExtNat proj_dim(const KupischSeries& s, Interval m) {
    return iterate_dim(s, m, [&](Interval x) { return syzygy(s, x); });
}

ExtNat inj_dim(const KupischSeries& s, Interval m) {
    return iterate_dim(s, m, [&](Interval x) { return cosyzygy(s, x); });
}

ExtNat domdim_module(const KupischSeries& s, Interval m) {
    std::set<Interval> seen;
    Interval cur = m;
    std::uint32_t k = 0;
    for (;;) {
        std::size_t soc = socle_vertex(s, cur);
        std::uint32_t d = left_projective_dim(s, soc);
        Interval envelope{s.vertex(static_cast<long long>(soc) - d + 1), d};
        if (!is_projective(s, envelope))
            return ExtNat::finite(k);
        if (d == cur.len)
            return ExtNat::infinite(); // cur is injective, coresolution ends
        if (!seen.insert(cur).second)
            return ExtNat::infinite();
        cur = *cosyzygy(s, cur);
        ++k;
    }
}

KupischSeries opposite(const KupischSeries& s) { return opposite_with_map(s).series; }

Interval dual_interval(const KupischSeries& s, Interval m) {
    OppositeMap om = opposite_with_map(s);
    std::size_t soc = socle_vertex(s, m);
    std::size_t raw_top = opposite_relabel(s, soc);
    std::size_t top = om.series.cyclic()
                          ? om.series.vertex(static_cast<long long>(raw_top) - om.rotation)
                          : raw_top;
    return {top, m.len};
}

bool is_selfinjective(const KupischSeries& s) {
    std::vector<Interval> p = projective_intervals(s);
    std::vector<Interval> i = injective_intervals(s);
    std::sort(p.begin(), p.end());
    std::sort(i.begin(), i.end());
    return p == i;
}

InvariantReport algebra_invariants(const KupischSeries& s) {
    InvariantReport r;
    r.exact = true;
    r.simple_count = s.n();
    r.selfinjective = is_selfinjective(s);

    std::vector<Interval> projs = projective_intervals(s);
    std::vector<Interval> injs = injective_intervals(s);
    std::set<Interval> inj_set(injs.begin(), injs.end());
    r.proj_noninjective_count = 0;
    for (const Interval& p : projs)
        if (!inj_set.count(p))
            ++r.proj_noninjective_count;

    r.domdim = ExtNat::infinite();
    for (const Interval& p : projs)
        r.domdim = ext_min(r.domdim, domdim_module(s, p));

    KupischSeries op = opposite(s);
    r.codomdim = ExtNat::infinite();
    for (const Interval& p : projective_intervals(op))
        r.codomdim = ext_min(r.codomdim, domdim_module(op, p));

    r.findim = ExtNat::finite(0);
    r.gldim = ExtNat::finite(0);
    r.inj_findim = ExtNat::finite(0);
    for (const Interval& m : all_intervals(s)) {
        ExtNat pd = proj_dim(s, m);
        if (pd.is_finite())
            r.findim = ext_max(r.findim, pd);
        if (m.len == 1)
            r.gldim = ext_max(r.gldim, pd);
        ExtNat id = inj_dim(s, m);
        if (id.is_finite())
            r.inj_findim = ext_max(r.inj_findim, id);
    }

    ExtNat injdim_reg = ExtNat::finite(0);
    for (const Interval& p : projs)
        injdim_reg = ext_max(injdim_reg, inj_dim(s, p));
    ExtNat pd_dual = ExtNat::finite(0);
    for (const Interval& i : injs)
        pd_dual = ext_max(pd_dual, proj_dim(s, i));
    if (injdim_reg.is_infinite() || pd_dual.is_infinite()) {
        r.gdim = ExtNat::infinite();
    } else {
        if (!(injdim_reg == pd_dual))
            throw ContractViolation("Gorenstein asymmetry on " + s.str() + ": injdim(A) = " +
                                    injdim_reg.str() + ", pd(D(A)) = " + pd_dual.str());
        r.gdim = injdim_reg;
    }
    return r;
}

NgasResult is_ngas(const KupischSeries& s) {
    NgasResult res;
    if (is_selfinjective(s))
        return res;
    std::vector<Interval> injs = injective_intervals(s);
    std::set<Interval> inj_set(injs.begin(), injs.end());
    bool domdim_positive = true;
    for (const Interval& p : projective_intervals(s)) {
        if (!inj_set.count(p))
            res.proj_noninjective.push_back(p);
        std::size_t soc = socle_vertex(s, p);
        std::uint32_t d = left_projective_dim(s, soc);
        Interval envelope{s.vertex(static_cast<long long>(soc) - d + 1), d};
        if (!is_projective(s, envelope))
            domdim_positive = false;
    }
    res.ngas = domdim_positive && res.proj_noninjective.size() == 1;
    return res;
}

namespace {

/// positions of vertex u inside the interval N (composition factors counted
/// from the top); cyclic intervals longer than n meet a vertex repeatedly.
std::vector<std::uint32_t> vertex_positions(const KupischSeries& s, Interval nmod, std::size_t u) {
    std::vector<std::uint32_t> pos;
    for (std::uint32_t q = 0; q < nmod.len; ++q)
        if (s.vertex(static_cast<long long>(nmod.top) + q) == u)
            pos.push_back(q);
    return pos;
}

} // namespace

std::uint32_t ext_dim(const KupischSeries& s, Interval m, Interval target, std::uint32_t degree) {
    // Minimal projective resolution of m has one indecomposable projective per
    // step; Hom(P_u, N) = N e_u and the induced differential is a truncated
    // shift on composition-factor positions.
    std::vector<Interval> omega; // omega[t] = Omega^t(m), while nonzero
    omega.push_back(m);
    for (std::uint32_t t = 0; t < degree + 1; ++t) {
        std::optional<Interval> next = syzygy(s, omega.back());
        if (!next)
            break;
        omega.push_back(*next);
    }
    auto hom_dim_at = [&](std::uint32_t t) -> std::uint32_t {
        if (t >= omega.size())
            return 0;
        return static_cast<std::uint32_t>(vertex_positions(s, target, omega[t].top).size());
    };
    // delta_t : Hom(P_t, N) -> Hom(P_{t+1}, N), phi -> phi . (path of length l_t)
    auto delta_rank = [&](std::uint32_t t) -> std::uint32_t {
        if (t + 1 >= omega.size())
            return 0;
        std::uint32_t shift = omega[t].len;
        std::uint32_t r = 0;
        for (std::uint32_t q : vertex_positions(s, target, omega[t].top))
            if (q + shift < target.len)
                ++r;
        return r;
    };
    if (degree == 0)
        return hom_dim_at(0) - delta_rank(0);
    if (degree >= omega.size())
        return 0;
    return hom_dim_at(degree) - delta_rank(degree) - delta_rank(degree - 1);
}

std::uint32_t hom_dim(const KupischSeries& s, Interval m, Interval target) {
    return ext_dim(s, m, target, 0);
}

std::vector<std::uint32_t> minimal_rotation(const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> best = v;
    std::vector<std::uint32_t> cur = v;
    for (std::size_t r = 1; r < v.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best)
            best = cur;
    }
    return best;
}

void enumerate_series(std::size_t n, std::uint32_t max_entry, SeriesKind kind,
                      const std::function<void(const KupischSeries&)>& yield) {
    if (n == 0 || max_entry < 2)
        throw InputError("enumerate_series: need n >= 1 and max_entry >= 2");
    if (kind == SeriesKind::Linear && n == 1)
        return; // only [1], the semisimple algebra K
    std::vector<std::uint32_t> c(n);
    if (kind == SeriesKind::Linear)
        c[n - 1] = 1;

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (kind == SeriesKind::Linear) {
            if (i == n - 1) {
                yield(KupischSeries(SeriesKind::Linear, c));
                return;
            }
            std::uint32_t lo = i == 0 ? 2 : std::max<std::uint32_t>(2, c[i - 1] - 1);
            std::uint32_t hi = (i == n - 2) ? 2 : max_entry; // c_{n-1}=1 forces c_{n-2}=2
            for (std::uint32_t v = lo; v <= hi; ++v) {
                c[i] = v;
                rec(i + 1);
            }
        } else {
            if (i == n) {
                if (c[0] + 1 < c[n - 1])
                    return; // wrap condition
                if (c != minimal_rotation(c))
                    return; // canonical representative only
                yield(KupischSeries(SeriesKind::Cyclic, c));
                return;
            }
            std::uint32_t lo = i == 0 ? 2 : std::max<std::uint32_t>(2, c[i - 1] - 1);
            for (std::uint32_t v = lo; v <= max_entry; ++v) {
                c[i] = v;
                rec(i + 1);
            }
        }
    };
    rec(0);
}

} // namespace findom
