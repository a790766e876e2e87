#pragma once

#include "findom/invariants.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace findom {

struct ViolatedKupischCondition : Error {
    std::size_t index; // 0-based index of the failing entry
    ViolatedKupischCondition(std::string msg, std::size_t i)
        : Error(std::move(msg)), index(i) {}
};

enum class SeriesKind { Linear, Cyclic };

/// Uniserial module M(top, len) over a Nakayama algebra: top S_top, socle
/// S_{top+len-1}. Vertices are 0-based here; the CLI layer is 1-based.
struct Interval {
    std::size_t top = 0;
    std::uint32_t len = 1;

    auto operator<=>(const Interval&) const = default;
    std::string str() const {
        return "M(" + std::to_string(top + 1) + "," + std::to_string(len) + ")";
    }
};

/// Kupisch series of a connected Nakayama algebra. Conventions: quiver arrow
/// i -> i+1 (mod n when cyclic), entry c_i = composition length of P_i, and
/// P_i has composition series S_i, S_{i+1}, ..., top to socle.
class KupischSeries {
public:
    KupischSeries(SeriesKind kind, std::vector<std::uint32_t> entries);

    SeriesKind kind() const { return kind_; }
    bool cyclic() const { return kind_ == SeriesKind::Cyclic; }
    std::size_t n() const { return c_.size(); }
    std::uint32_t entry(std::size_t i) const { return c_[i]; }
    const std::vector<std::uint32_t>& entries() const { return c_; }

    std::size_t vertex(long long v) const {
        if (cyclic()) {
            long long m = v % static_cast<long long>(n());
            return static_cast<std::size_t>(m < 0 ? m + n() : m);
        }
        return static_cast<std::size_t>(v);
    }

    std::size_t algebra_dim() const;
    std::string str() const;

    bool operator==(const KupischSeries& o) const {
        return kind_ == o.kind_ && c_ == o.c_;
    }

private:
    SeriesKind kind_;
    std::vector<std::uint32_t> c_;
};

/// Throws ViolatedKupischCondition unless the admissibility constraints hold.
void validate(SeriesKind kind, const std::vector<std::uint32_t>& entries);

bool is_projective(const KupischSeries& s, Interval m);
bool is_injective(const KupischSeries& s, Interval m);
std::size_t socle_vertex(const KupischSeries& s, Interval m);

std::vector<Interval> projective_intervals(const KupischSeries& s);

/// The n indecomposable injectives; entry j has socle S_j.
std::vector<Interval> injective_intervals(const KupischSeries& s);

/// All intervals M(i,l), 1 <= l <= c_i, in lexicographic order.
std::vector<Interval> all_intervals(const KupischSeries& s);

/// Kernel of the projective cover P_top -> m; absent iff m is projective.
std::optional<Interval> syzygy(const KupischSeries& s, Interval m);

/// Cokernel of the injective envelope; absent iff m is injective.
std::optional<Interval> cosyzygy(const KupischSeries& s, Interval m);

ExtNat proj_dim(const KupischSeries& s, Interval m);
ExtNat inj_dim(const KupischSeries& s, Interval m);

/// Count of initial projective terms of the minimal injective coresolution
/// (the +1 convention: domdim >= 1 iff the envelope itself is projective).
ExtNat domdim_module(const KupischSeries& s, Interval m);

/// Kupisch series of the opposite algebra, under the same conventions
/// (cyclic output canonicalized to its minimal rotation).
KupischSeries opposite(const KupischSeries& s);

/// Dual interval: D(M) over the opposite series, matching opposite()'s
/// vertex relabeling.
Interval dual_interval(const KupischSeries& s, Interval m);

bool is_selfinjective(const KupischSeries& s);

InvariantReport algebra_invariants(const KupischSeries& s);

struct NgasResult {
    bool ngas = false;
    std::vector<Interval> proj_noninjective; // witness
};
NgasResult is_ngas(const KupischSeries& s);

/// dim Ext^degree(m, target); degree 0 gives dim Hom. Exact, computed from the
/// interval-valued minimal projective resolution.
std::uint32_t ext_dim(const KupischSeries& s, Interval m, Interval target, std::uint32_t degree);

std::uint32_t hom_dim(const KupischSeries& s, Interval m, Interval target);

/// Every valid series with the given vertex count and entry bound, exactly
/// once (cyclic series up to rotation, canonical representative = smallest
/// rotation), in lexicographic order. Linear n=1 yields nothing: the only
/// candidate [1] is the semisimple algebra K, which stays out of scans.
void enumerate_series(std::size_t n, std::uint32_t max_entry, SeriesKind kind,
                      const std::function<void(const KupischSeries&)>& yield);

std::vector<std::uint32_t> minimal_rotation(const std::vector<std::uint32_t>& v);

} // namespace findom
