#pragma once

#include "findom/kupisch.hpp"
#include "findom/matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace findom {

struct NonAdmissible : Error {
    using Error::Error;
};
struct NotAGroup : Error {
    using Error::Error;
};
struct AssociativityFailure : Error {
    using Error::Error;
};
struct BadIdempotents : Error {
    using Error::Error;
};
struct RadicalNotNilpotent : Error {
    using Error::Error;
};

using Vec = std::vector<std::uint32_t>; // coordinate vector over GF(p)

Matrix as_column(const PrimeField& f, const Vec& v);
Vec column_of(const Matrix& m, std::size_t j);

enum class EnumStrategy { None, Kupisch, UniserialLocal };

/// How much of the construction to re-check. Tables from input files get the
/// full associativity scan; algebras we assemble ourselves (path algebras,
/// group algebras from verified tables, tensors, endomorphism rings) satisfy
/// it by construction and only get the structural checks.
enum class Validation { Full, Structural };

struct MonomialArrow {
    std::string name;
    std::size_t source = 0, target = 0; // 0-based vertices
};

struct MonomialPresentation {
    std::size_t vertices = 0;
    std::vector<MonomialArrow> arrows;
    std::vector<std::vector<std::size_t>> relations; // arrow index sequences, length >= 2
};

/// A split finite-dimensional algebra over GF(p) given by structure
/// constants, orthogonal primitive idempotents summing to 1, and a basis of
/// the Jacobson radical. Immutable after construction.
class FiniteAlgebra {
public:
    struct Generator {
        Vec element;
        std::size_t from = 0, to = 0; // acts Me_from -> Me_to on right modules
    };
    struct Word {
        long parent = -1;     // index of parent word, -1 for roots
        std::size_t gen = 0;  // generator index (arrow), or idempotent index for roots
        Vec value;
    };

    PrimeField field;
    std::size_t dim = 0;
    std::vector<Matrix> rmul;              // rmul[a] column j = coords of b_j * b_a
    Vec unit;
    std::vector<Vec> idempotents;
    Matrix radical;                        // columns span J
    std::vector<std::string> names;        // basis element names (may be empty)
    std::string description;
    EnumStrategy strategy = EnumStrategy::None;
    std::optional<KupischSeries> series;   // set when realized from a Kupisch series

    // derived data
    std::vector<Generator> arrows;         // homogeneous radical generators
    std::vector<Word> words;               // dim spanning words, parents precede children
    Matrix word_matrix;                    // columns = word values (invertible)
    Matrix word_matrix_inv;
    std::vector<Matrix> vertex_basis;      // vertex_basis[i] columns = basis of e_i A
    std::vector<Matrix> vertex_words;      // word_matrix_inv * vertex_basis[i]

    std::size_t simple_count() const { return idempotents.size(); }

    Vec mul(const Vec& x, const Vec& y) const;          // x * y
    Matrix right_mult(const Vec& x) const;              // column j = b_j * x
    Matrix left_mult(const Vec& x) const;               // column j = x * b_j
    Vec apply_unit() const { return unit; }

    static std::shared_ptr<const FiniteAlgebra> create(FiniteAlgebra data, Validation level);

private:
    void finalize(Validation level);
};

using AlgPtr = std::shared_ptr<const FiniteAlgebra>;

/// Structure constants from a monomial bound quiver; basis = nonzero paths.
AlgPtr from_monomial(const MonomialPresentation& pres, PrimeField field);

/// Group algebra from a multiplication table (indices into `elements`).
/// Restricted to p-groups over GF(p), where the radical is the augmentation
/// ideal; other modular cases need an explicit table input.
AlgPtr from_group_table(const std::vector<std::string>& elements,
                        const std::vector<std::vector<std::size_t>>& table, PrimeField field);

/// Raw structure constants mult[i][j] = coordinates of b_i * b_j. For local
/// algebras pass `local = true` with basis element 0 the unit; the radical is
/// then the span of the remaining basis vectors. Otherwise idempotents and a
/// radical basis must be supplied.
AlgPtr from_table(PrimeField field, const std::vector<std::vector<Vec>>& mult,
                  bool local, std::vector<Vec> idempotents, std::vector<Vec> radical,
                  std::vector<std::string> names = {});

/// Monomial path-algebra realization of a Kupisch series; basis = paths
/// (vertex, length), idempotents = trivial paths.
AlgPtr from_kupisch(const KupischSeries& s, PrimeField field);

AlgPtr opposite_algebra(const AlgPtr& a);
AlgPtr tensor_algebra(const AlgPtr& a, const AlgPtr& b);
AlgPtr enveloping_algebra(const AlgPtr& a);

} // namespace findom
