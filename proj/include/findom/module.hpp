#pragma once

#include "findom/algebra.hpp"
#include "findom/extnat.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace findom {

struct AlgebraMismatch : Error {
    using Error::Error;
};

/// A finite-dimensional right module, presented by the actions of the
/// algebra's idempotents and arrow generators (these generate the algebra,
/// so the full action is determined). Elements are column vectors and
/// actions compose contravariantly: action(ab) = action(b) * action(a).
struct RightModule {
    AlgPtr alg;
    std::size_t dim = 0;
    std::vector<Matrix> idem_action;
    std::vector<Matrix> arrow_action;
    std::string label;

    // Peirce decomposition M = (+) M e_i
    std::vector<Matrix> block_basis; // basis of M e_i
    std::vector<std::size_t> block_dim;
    Matrix peirce;     // [block bases], invertible dim x dim
    Matrix peirce_inv;

    Matrix action_of(const Vec& element) const; // full action matrix of one element
};

using ModPtr = std::shared_ptr<const RightModule>;

struct ModuleMap {
    ModPtr source;
    ModPtr target;
    Matrix matrix; // target.dim x source.dim
};

ModPtr make_module(AlgPtr alg, std::vector<Matrix> idem_action, std::vector<Matrix> arrow_action,
                   std::string label);

/// From one action matrix per algebra basis element (validates the action
/// axioms, then keeps only the generator actions).
ModPtr module_from_actions(AlgPtr alg, const std::vector<Matrix>& actions, std::string label);

struct DirectSum {
    ModPtr module;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
};

struct Cover {
    ModuleMap map;                     // P -> M, minimal
    std::vector<std::size_t> vertices; // P = (+) P_{vertices[k]}
    ModPtr source;
};

struct IsoResult {
    bool iso = false;
    bool certified = true; // false only after a failed randomized search
};

/// Shared, immutable computation context for one algebra: projectives,
/// injectives, simples, the opposite context, and all module operations.
class AlgebraContext : public std::enable_shared_from_this<AlgebraContext> {
public:
    static std::shared_ptr<AlgebraContext> make(AlgPtr a);

    const AlgPtr& algebra() const { return alg_; }
    PrimeField field() const { return alg_->field; }
    std::size_t simple_count() const { return alg_->simple_count(); }

    const AlgebraContext& op() const; // opposite context; op().op() is *this

    ModPtr zero() const { return zero_; }
    ModPtr regular() const { return regular_; }
    ModPtr dual_regular() const;
    ModPtr projective(std::size_t i) const { return projectives_.at(i); }
    ModPtr simple(std::size_t i) const { return simples_.at(i); }
    ModPtr injective(std::size_t i) const;

    // --- structural constructions ---
    ModPtr submodule(const ModPtr& m, const Matrix& basis_cols, ModuleMap* inclusion = nullptr) const;
    ModPtr quotient(const ModPtr& m, const Matrix& sub_cols, ModuleMap* projection = nullptr) const;
    ModPtr kernel(const ModuleMap& f, ModuleMap* inclusion = nullptr) const;
    ModPtr cokernel(const ModuleMap& f, ModuleMap* projection = nullptr) const;
    DirectSum direct_sum(const std::vector<ModPtr>& parts) const;

    /// Smallest submodule-invariant subspace containing the given columns.
    Matrix invariant_closure(const RightModule& m, Matrix cols) const;
    Matrix radical_part(const RightModule& m) const; // basis of M J
    Matrix socle_part(const RightModule& m) const;   // basis of soc M
    std::vector<std::size_t> top_multiplicities(const RightModule& m) const;

    ModPtr dual(const ModPtr& m) const; // right module over the opposite algebra

    Cover projective_cover(const ModPtr& m) const;
    ModPtr syzygy(const ModPtr& m, ModuleMap* inclusion = nullptr,
                  Cover* cover_out = nullptr) const;
    ModuleMap injective_envelope(const ModPtr& m) const; // M -> I(M)
    ModPtr cosyzygy(const ModPtr& m) const;

    bool is_projective_module(const ModPtr& m) const;
    bool is_injective_module(const ModPtr& m) const;
    bool selfinjective() const;

    // --- hom and ext ---
    std::vector<Matrix> hom_space(const RightModule& m, const RightModule& n) const;
    std::size_t hom_dim(const RightModule& m, const RightModule& n) const;
    std::uint32_t ext_dim(std::uint32_t degree, const ModPtr& m, const ModPtr& n) const;

    IsoResult is_isomorphic(const ModPtr& m, const ModPtr& n, std::uint64_t seed = 0) const;

    ModPtr ar_translate(const ModPtr& m) const;

    // --- bounded homological dimensions (cutoff-limited, cycle-exact) ---
    ExtNat proj_dim_bounded(const ModPtr& m, std::uint32_t cutoff, std::uint64_t seed = 0) const;
    ExtNat inj_dim_bounded(const ModPtr& m, std::uint32_t cutoff, std::uint64_t seed = 0) const;
    ExtNat domdim_module_bounded(const ModPtr& m, std::uint32_t cutoff,
                                 std::uint64_t seed = 0) const;
    ExtNat domdim_algebra_bounded(std::uint32_t cutoff, std::uint64_t seed = 0) const;

private:
    explicit AlgebraContext(AlgPtr a);
    void build();

    AlgPtr alg_;
    ModPtr zero_;
    ModPtr regular_;
    std::vector<ModPtr> projectives_;
    std::vector<ModPtr> simples_;

    mutable std::vector<ModPtr> injectives_;
    mutable ModPtr dual_regular_;
    mutable std::shared_ptr<AlgebraContext> op_;
    mutable std::weak_ptr<AlgebraContext> op_back_;
    mutable std::mutex lazy_mutex_;

    friend class ProjResolution;
};

using CtxPtr = std::shared_ptr<AlgebraContext>;

/// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0, extended on
/// demand; Ext^i(M, N) read off by applying Hom(-, N).
class ProjResolution {
public:
    ProjResolution(const AlgebraContext& ctx, ModPtr m);

    /// Ensure P_0..P_steps exist (or the resolution provably stops earlier).
    void extend(std::size_t steps);

    std::size_t known_steps() const { return covers_.size(); }
    bool finished() const { return finished_; }
    const Cover& cover(std::size_t t) const { return covers_.at(t); }
    ModPtr omega(std::size_t t) const; // Omega^t(M), t <= known steps
    /// differential P_t -> P_{t-1} (t >= 1)
    Matrix differential(std::size_t t) const;

    std::uint32_t ext_dim(std::uint32_t degree, const RightModule& n);

private:
    const AlgebraContext& ctx_;
    ModPtr m_;
    std::vector<Cover> covers_;      // covers_[t] : P_t -> Omega^t
    std::vector<ModuleMap> inclusions_; // Omega^{t+1} -> P_t
    std::vector<ModPtr> omegas_;     // omegas_[t] = Omega^t, omegas_[0] = M
    bool finished_ = false;          // some Omega^t = 0 reached
};

/// Express x in the basis of independent matrices given by `basis` (all the
/// same shape); absent when x is outside the span.
std::optional<Vec> coordinates_in(const std::vector<Matrix>& basis, const Matrix& x);

ModuleMap compose(const ModuleMap& g, const ModuleMap& f); // g . f

/// Matrix realization of the uniserial module M(top, len) over a context
/// whose algebra was built from a Kupisch series.
ModPtr realize_interval(const AlgebraContext& ctx, Interval iv);

} // namespace findom
