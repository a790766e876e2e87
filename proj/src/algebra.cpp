#include "findom/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace findom {

Matrix as_column(const PrimeField& f, const Vec& v) {
    Matrix m(f, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m.at(i, 0) = v[i] % f.p;
    return m;
}

Vec column_of(const Matrix& m, std::size_t j) {
    Vec v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        v[i] = m.at(i, j);
    return v;
}

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    const PrimeField f = a.field();
    Matrix r(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            std::uint32_t v = a.at(i1, j1);
            if (!v)
                continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    r.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = f.mul(v, b.at(i2, j2));
        }
    return r;
}

Vec matvec(const Matrix& m, const Vec& x) {
    const PrimeField f = m.field();
    Vec y(m.rows(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!x[j])
            continue;
        for (std::size_t i = 0; i < m.rows(); ++i)
            y[i] = f.add(y[i], f.mul(m.at(i, j), x[j]));
    }
    return y;
}

/// Incremental row-reduced span of coordinate vectors.
class SpanTracker {
public:
    SpanTracker(PrimeField f, std::size_t dim) : f_(f), dim_(dim) {}

    /// Returns true when v enlarged the span.
    bool add(const Vec& v) {
        Vec r = v;
        reduce(r);
        std::size_t piv = dim_;
        for (std::size_t i = 0; i < dim_; ++i)
            if (r[i]) {
                piv = i;
                break;
            }
        if (piv == dim_)
            return false;
        std::uint32_t inv = f_.inv(r[piv]);
        for (auto& x : r)
            x = f_.mul(x, inv);
        rows_.emplace_back(piv, std::move(r));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    void reduce(Vec& r) const {
        for (const auto& [piv, row] : rows_) {
            std::uint32_t c = r[piv];
            if (!c)
                continue;
            for (std::size_t i = piv; i < dim_; ++i)
                r[i] = f_.sub(r[i], f_.mul(c, row[i]));
        }
    }

    PrimeField f_;
    std::size_t dim_;
    std::vector<std::pair<std::size_t, Vec>> rows_;
};

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

} // namespace

Vec FiniteAlgebra::mul(const Vec& x, const Vec& y) const {
    Vec z(dim, 0);
    for (std::size_t a = 0; a < dim; ++a) {
        if (!y[a])
            continue;
        // x * b_a = rmul[a] * x
        for (std::size_t j = 0; j < dim; ++j) {
            if (!x[j])
                continue;
            std::uint32_t c = field.mul(x[j], y[a]);
            for (std::size_t i = 0; i < dim; ++i)
                z[i] = field.add(z[i], field.mul(c, rmul[a].at(i, j)));
        }
    }
    return z;
}

Matrix FiniteAlgebra::right_mult(const Vec& x) const {
    Matrix r(field, dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
        if (x[a]) {
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    r.at(i, j) = field.add(r.at(i, j), field.mul(x[a], rmul[a].at(i, j)));
        }
    return r;
}

Matrix FiniteAlgebra::left_mult(const Vec& x) const {
    // column j = x * b_j = rmul[j] * x
    Matrix r(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec col = matvec(rmul[j], x);
        for (std::size_t i = 0; i < dim; ++i)
            r.at(i, j) = col[i];
    }
    return r;
}

void FiniteAlgebra::finalize(Validation level) {
    const std::size_t n = idempotents.size();
    if (n == 0)
        throw BadIdempotents("no idempotents given");
    if (unit.size() != dim)
        throw ContractViolation("unit has wrong dimension");

    if (!(right_mult(unit) == Matrix::identity(field, dim)))
        throw AssociativityFailure("unit is not a right identity");
    if (!(left_mult(unit) == Matrix::identity(field, dim)))
        throw AssociativityFailure("unit is not a left identity");

    if (level == Validation::Full) {
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t k = 0; k < dim; ++k) {
                Vec prod = column_of(rmul[k], j); // b_j * b_k
                if (!(right_mult(prod) == rmul[k] * rmul[j]))
                    throw AssociativityFailure("associativity fails at basis pair (" +
                                               std::to_string(j + 1) + "," +
                                               std::to_string(k + 1) + ")");
            }
        }
    }

    Vec sum(dim, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& e = idempotents[i];
        if (e.size() != dim)
            throw BadIdempotents("idempotent has wrong dimension");
        if (!(mul(e, e) == e))
            throw BadIdempotents("e_" + std::to_string(i + 1) + " is not idempotent");
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !is_zero_vec(mul(idempotents[i], idempotents[j])))
                throw BadIdempotents("idempotents " + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + " not orthogonal");
        for (std::size_t k = 0; k < dim; ++k)
            sum[k] = field.add(sum[k], e[k]);
    }
    if (sum != unit)
        throw BadIdempotents("idempotents do not sum to 1");

    const std::size_t jdim = radical.cols();
    if (rank(radical) != jdim)
        throw RadicalNotNilpotent("radical basis is not linearly independent");
    if (dim - jdim != n)
        throw BadIdempotents("A/J is not a product of " + std::to_string(n) +
                             " copies of the base field");

    std::vector<Vec> jbasis;
    std::vector<Matrix> rmul_rad, lmul_rad;
    for (std::size_t c = 0; c < jdim; ++c) {
        jbasis.push_back(column_of(radical, c));
        rmul_rad.push_back(right_mult(jbasis.back()));
        lmul_rad.push_back(left_mult(jbasis.back()));
    }
    for (std::size_t c = 0; c < jdim; ++c)
        if (!columns_contained(rmul_rad[c], radical) || !columns_contained(lmul_rad[c], radical))
            throw RadicalNotNilpotent("declared radical is not a two-sided ideal");
    {
        Matrix power = radical;
        std::size_t level_count = 0;
        while (power.cols() > 0) {
            if (++level_count > dim)
                throw RadicalNotNilpotent("radical is not nilpotent");
            Matrix next(field, dim, jdim * power.cols());
            for (std::size_t c = 0; c < jdim; ++c) {
                Matrix prod = rmul_rad[c] * power; // columns x * r_c
                for (std::size_t k = 0; k < power.cols(); ++k)
                    for (std::size_t i = 0; i < dim; ++i)
                        next.at(i, c * power.cols() + k) = prod.at(i, k);
            }
            power = column_space_basis(next);
        }
    }

    // homogeneous generators of J modulo J^2 (kept when preset, e.g. the
    // opposite algebra reuses the original's generators with blocks swapped
    // so that duality can transpose generator actions)
    if (arrows.empty()) {
        SpanTracker covered(field, dim);
        for (std::size_t c = 0; c < jdim; ++c)
            for (std::size_t c2 = 0; c2 < jdim; ++c2)
                covered.add(matvec(rmul_rad[c2], jbasis[c])); // r_c * r_c2
        std::vector<Matrix> lmul_idem, rmul_idem;
        for (std::size_t i = 0; i < n; ++i) {
            lmul_idem.push_back(left_mult(idempotents[i]));
            rmul_idem.push_back(right_mult(idempotents[i]));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (const Vec& r : jbasis) {
                    Vec g = matvec(lmul_idem[i], matvec(rmul_idem[j], r)); // e_i r e_j
                    if (covered.add(g))
                        arrows.push_back({g, i, j});
                }
    }

    // spanning words e_i . g1 . g2 ... (parents precede children)
    words.clear();
    {
        std::vector<Matrix> arrow_rmul;
        for (const Generator& g : arrows)
            arrow_rmul.push_back(right_mult(g.element));
        SpanTracker span(field, dim);
        struct Pending {
            long idx;
            std::size_t end_block;
        };
        std::vector<Pending> frontier;
        for (std::size_t i = 0; i < n; ++i) {
            if (!span.add(idempotents[i]))
                throw BadIdempotents("idempotents are linearly dependent");
            words.push_back({-1, i, idempotents[i]});
            frontier.push_back({static_cast<long>(words.size()) - 1, i});
        }
        while (!frontier.empty() && span.rank() < dim) {
            std::vector<Pending> next;
            for (const Pending& w : frontier) {
                for (std::size_t g = 0; g < arrows.size(); ++g) {
                    if (arrows[g].from != w.end_block)
                        continue;
                    Vec v = matvec(arrow_rmul[g], words[w.idx].value);
                    if (!span.add(v))
                        continue;
                    words.push_back({w.idx, g, std::move(v)});
                    next.push_back({static_cast<long>(words.size()) - 1, arrows[g].to});
                }
            }
            frontier = std::move(next);
        }
        if (span.rank() < dim)
            throw ContractViolation("algebra is not generated by idempotents and J/J^2");
    }

    word_matrix = Matrix(field, dim, dim);
    for (std::size_t s = 0; s < dim; ++s)
        for (std::size_t i = 0; i < dim; ++i)
            word_matrix.at(i, s) = words[s].value[i];
    auto inv = inverse(word_matrix);
    if (!inv)
        throw ContractViolation("word matrix is singular");
    word_matrix_inv = *inv;

    vertex_basis.clear();
    vertex_words.clear();
    for (std::size_t i = 0; i < n; ++i) {
        Matrix b = column_space_basis(left_mult(idempotents[i]));
        vertex_words.push_back(word_matrix_inv * b);
        vertex_basis.push_back(std::move(b));
    }
}

AlgPtr FiniteAlgebra::create(FiniteAlgebra data, Validation level) {
    data.finalize(level);
    return std::make_shared<const FiniteAlgebra>(std::move(data));
}

AlgPtr from_table(PrimeField field, const std::vector<std::vector<Vec>>& mult, bool local,
                  std::vector<Vec> idempotents, std::vector<Vec> radical,
                  std::vector<std::string> names) {
    const std::size_t d = mult.size();
    if (d == 0)
        throw InputError("empty structure constant table");
    FiniteAlgebra a;
    a.field = field;
    a.dim = d;
    a.rmul.assign(d, Matrix(field, d, d));
    for (std::size_t i = 0; i < d; ++i) {
        if (mult[i].size() != d)
            throw InputError("structure constant table is not square");
        for (std::size_t j = 0; j < d; ++j) {
            if (mult[i][j].size() != d)
                throw InputError("structure constant entry has wrong length");
            for (std::size_t k = 0; k < d; ++k)
                a.rmul[j].at(k, i) = mult[i][j][k] % field.p;
        }
    }
    if (local) {
        a.unit.assign(d, 0);
        a.unit[0] = 1;
        a.idempotents = {a.unit};
        a.radical = Matrix(field, d, d - 1);
        for (std::size_t k = 1; k < d; ++k)
            a.radical.at(k, k - 1) = 1;
    } else {
        if (idempotents.empty())
            throw InputError("non-local table input needs explicit idempotents");
        for (Vec& e : idempotents)
            for (auto& x : e)
                x %= field.p;
        a.idempotents = std::move(idempotents);
        a.unit.assign(d, 0);
        for (const Vec& e : a.idempotents)
            for (std::size_t k = 0; k < d; ++k)
                a.unit[k] = field.add(a.unit[k], e[k]);
        a.radical = Matrix(field, d, radical.size());
        for (std::size_t c = 0; c < radical.size(); ++c)
            for (std::size_t k = 0; k < d; ++k)
                a.radical.at(k, c) = radical[c][k] % field.p;
    }
    a.names = std::move(names);
    a.description = "table algebra";
    return FiniteAlgebra::create(std::move(a), Validation::Full);
}

AlgPtr from_group_table(const std::vector<std::string>& elements,
                        const std::vector<std::vector<std::size_t>>& table, PrimeField field) {
    const std::size_t g = elements.size();
    if (g == 0 || table.size() != g)
        throw NotAGroup("table size does not match element count");
    for (const auto& row : table) {
        if (row.size() != g)
            throw NotAGroup("table is not square");
        for (std::size_t x : row)
            if (x >= g)
                throw NotAGroup("table entry out of range");
    }
    std::size_t id = g;
    for (std::size_t e = 0; e < g; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < g && ok; ++i)
            ok = table[e][i] == i && table[i][e] == i;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id == g)
        throw NotAGroup("no identity element");
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t k = 0; k < g; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw NotAGroup("multiplication table is not associative");
    for (std::size_t i = 0; i < g; ++i) {
        bool has_inverse = false;
        for (std::size_t j = 0; j < g && !has_inverse; ++j)
            has_inverse = table[i][j] == id && table[j][i] == id;
        if (!has_inverse)
            throw NotAGroup("element " + elements[i] + " has no inverse");
    }
    std::size_t order = g;
    while (order % field.p == 0)
        order /= field.p;
    if (order != 1)
        throw InputError("group order " + std::to_string(g) + " is not a power of " +
                         std::to_string(field.p) +
                         "; only modular p-group algebras are supported here");

    FiniteAlgebra a;
    a.field = field;
    a.dim = g;
    a.rmul.assign(g, Matrix(field, g, g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            a.rmul[j].at(table[i][j], i) = 1;
    a.unit.assign(g, 0);
    a.unit[id] = 1;
    a.idempotents = {a.unit};
    // augmentation ideal: g - 1 for g != 1
    a.radical = Matrix(field, g, g - 1);
    std::size_t c = 0;
    for (std::size_t i = 0; i < g; ++i) {
        if (i == id)
            continue;
        a.radical.at(i, c) = 1;
        a.radical.at(id, c) = field.neg(1);
        ++c;
    }
    a.names = elements;
    a.description = "group algebra";
    return FiniteAlgebra::create(std::move(a), Validation::Structural);
}

namespace {

struct Path {
    std::size_t start;
    std::vector<std::size_t> arrows;
};

} // namespace

AlgPtr from_monomial(const MonomialPresentation& pres, PrimeField field) {
    if (pres.vertices == 0)
        throw InputError("monomial presentation needs at least one vertex");
    for (const auto& ar : pres.arrows)
        if (ar.source >= pres.vertices || ar.target >= pres.vertices)
            throw InputError("arrow endpoint out of range");
    std::size_t max_rel = 2;
    for (const auto& rel : pres.relations) {
        if (rel.size() < 2)
            throw InputError("relations must be paths of length >= 2");
        for (std::size_t a : rel)
            if (a >= pres.arrows.size())
                throw InputError("relation uses unknown arrow");
        for (std::size_t t = 0; t + 1 < rel.size(); ++t)
            if (pres.arrows[rel[t]].target != pres.arrows[rel[t + 1]].source)
                throw InputError("relation is not a composable path");
        max_rel = std::max(max_rel, rel.size());
    }

    auto ends_with_relation = [&](const std::vector<std::size_t>& arrows) {
        for (const auto& rel : pres.relations) {
            if (rel.size() > arrows.size())
                continue;
            if (std::equal(rel.begin(), rel.end(), arrows.end() - rel.size()))
                return true;
        }
        return false;
    };

    std::vector<Path> paths;
    for (std::size_t v = 0; v < pres.vertices; ++v)
        paths.push_back({v, {}});
    std::vector<Path> level = paths;
    std::size_t window_count = 0;
    for (std::size_t len = 1; !level.empty(); ++len) {
        std::vector<Path> next;
        for (const Path& p : level) {
            std::size_t end = p.arrows.empty() ? p.start : pres.arrows[p.arrows.back()].target;
            for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
                if (pres.arrows[a].source != end)
                    continue;
                Path q = p;
                q.arrows.push_back(a);
                if (!ends_with_relation(q.arrows))
                    next.push_back(std::move(q));
            }
        }
        if (len == max_rel - 1)
            window_count = next.size();
        // pigeonhole: a path surviving this long repeats a window and pumps
        if (len >= max_rel && !next.empty() && len > window_count + max_rel)
            throw NonAdmissible("the set of nonzero paths is infinite");
        for (const Path& p : next)
            paths.push_back(p);
        level = std::move(next);
    }

    const std::size_t d = paths.size();
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i)
        index[{paths[i].start, paths[i].arrows}] = i;

    FiniteAlgebra a;
    a.field = field;
    a.dim = d;
    a.rmul.assign(d, Matrix(field, d, d));
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t end_i =
            paths[i].arrows.empty() ? paths[i].start : pres.arrows[paths[i].arrows.back()].target;
        for (std::size_t j = 0; j < d; ++j) {
            if (paths[j].start != end_i)
                continue;
            Path prod = paths[i];
            prod.arrows.insert(prod.arrows.end(), paths[j].arrows.begin(), paths[j].arrows.end());
            auto it = index.find({prod.start, prod.arrows});
            if (it != index.end())
                a.rmul[j].at(it->second, i) = 1;
        }
    }
    a.unit.assign(d, 0);
    for (std::size_t v = 0; v < pres.vertices; ++v) {
        Vec e(d, 0);
        e[v] = 1;
        a.unit[v] = 1;
        a.idempotents.push_back(std::move(e));
    }
    a.radical = Matrix(field, d, d - pres.vertices);
    for (std::size_t i = pres.vertices; i < d; ++i)
        a.radical.at(i, i - pres.vertices) = 1;
    a.names.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (paths[i].arrows.empty()) {
            a.names[i] = "e" + std::to_string(paths[i].start + 1);
        } else {
            std::string s;
            for (std::size_t ar : paths[i].arrows)
                s += pres.arrows[ar].name;
            a.names[i] = s;
        }
    }
    a.description = "monomial algebra";
    return FiniteAlgebra::create(std::move(a), Validation::Structural);
}

AlgPtr from_kupisch(const KupischSeries& s, PrimeField field) {
    std::vector<std::pair<std::size_t, std::uint32_t>> basis;
    std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < s.n(); ++i)
        basis.push_back({i, 0});
    for (std::size_t i = 0; i < s.n(); ++i)
        for (std::uint32_t t = 1; t < s.entry(i); ++t)
            basis.push_back({i, t});
    const std::size_t d = basis.size();
    for (std::size_t k = 0; k < d; ++k)
        index[basis[k]] = k;

    FiniteAlgebra a;
    a.field = field;
    a.dim = d;
    a.rmul.assign(d, Matrix(field, d, d));
    for (std::size_t i = 0; i < d; ++i) {
        auto [vi, ti] = basis[i];
        std::size_t end_i = s.vertex(static_cast<long long>(vi) + ti);
        for (std::size_t j = 0; j < d; ++j) {
            auto [vj, tj] = basis[j];
            if (vj != end_i)
                continue;
            if (ti + tj < s.entry(vi))
                a.rmul[j].at(index[{vi, static_cast<std::uint32_t>(ti + tj)}], i) = 1;
        }
    }
    a.unit.assign(d, 0);
    for (std::size_t v = 0; v < s.n(); ++v) {
        Vec e(d, 0);
        e[v] = 1;
        a.unit[v] = 1;
        a.idempotents.push_back(std::move(e));
    }
    a.radical = Matrix(field, d, d - s.n());
    for (std::size_t k = s.n(); k < d; ++k)
        a.radical.at(k, k - s.n()) = 1;
    a.names.resize(d);
    for (std::size_t k = 0; k < d; ++k)
        a.names[k] = basis[k].second == 0 ? "e" + std::to_string(basis[k].first + 1)
                                          : "p" + std::to_string(basis[k].first + 1) + "^" +
                                                std::to_string(basis[k].second);
    a.description = s.str();
    a.strategy = EnumStrategy::Kupisch;
    a.series = s;
    return FiniteAlgebra::create(std::move(a), Validation::Structural);
}

AlgPtr opposite_algebra(const AlgPtr& a) {
    FiniteAlgebra op;
    op.field = a->field;
    op.dim = a->dim;
    op.rmul.resize(a->dim, Matrix(a->field, a->dim, a->dim));
    for (std::size_t k = 0; k < a->dim; ++k) {
        Vec bk(a->dim, 0);
        bk[k] = 1;
        op.rmul[k] = a->left_mult(bk);
    }
    op.unit = a->unit;
    op.idempotents = a->idempotents;
    op.radical = a->radical;
    op.names = a->names;
    op.description = a->description.empty() ? "opposite" : a->description + "^op";
    if (a->strategy == EnumStrategy::UniserialLocal)
        op.strategy = EnumStrategy::UniserialLocal;
    for (const FiniteAlgebra::Generator& g : a->arrows)
        op.arrows.push_back({g.element, g.to, g.from});
    return FiniteAlgebra::create(std::move(op), Validation::Structural);
}

AlgPtr tensor_algebra(const AlgPtr& a, const AlgPtr& b) {
    if (!(a->field == b->field))
        throw ContractViolation("tensor factors live over different fields");
    const PrimeField f = a->field;
    const std::size_t d = a->dim * b->dim;
    FiniteAlgebra t;
    t.field = f;
    t.dim = d;
    t.rmul.reserve(d);
    for (std::size_t i = 0; i < a->dim; ++i)
        for (std::size_t j = 0; j < b->dim; ++j)
            t.rmul.push_back(kron(a->rmul[i], b->rmul[j]));
    auto kron_vec = [&](const Vec& x, const Vec& y) {
        Vec z(d, 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                z[i * y.size() + j] = f.mul(x[i], y[j]);
        return z;
    };
    t.unit = kron_vec(a->unit, b->unit);
    for (const Vec& e : a->idempotents)
        for (const Vec& g : b->idempotents)
            t.idempotents.push_back(kron_vec(e, g));
    // J(A (x) B) = J_A (x) B + A (x) J_B for split algebras
    Matrix jcols(f, d, a->radical.cols() * b->dim + a->dim * b->radical.cols());
    std::size_t col = 0;
    for (std::size_t c = 0; c < a->radical.cols(); ++c)
        for (std::size_t j = 0; j < b->dim; ++j, ++col)
            for (std::size_t i = 0; i < a->dim; ++i)
                jcols.at(i * b->dim + j, col) = a->radical.at(i, c);
    for (std::size_t i = 0; i < a->dim; ++i)
        for (std::size_t c = 0; c < b->radical.cols(); ++c, ++col)
            for (std::size_t j = 0; j < b->dim; ++j)
                jcols.at(i * b->dim + j, col) = b->radical.at(j, c);
    t.radical = column_space_basis(jcols);
    if (!a->names.empty() && !b->names.empty()) {
        t.names.resize(d);
        for (std::size_t i = 0; i < a->dim; ++i)
            for (std::size_t j = 0; j < b->dim; ++j)
                t.names[i * b->dim + j] = a->names[i] + "(x)" + b->names[j];
    }
    t.description = "tensor product";
    return FiniteAlgebra::create(std::move(t), Validation::Structural);
}

AlgPtr enveloping_algebra(const AlgPtr& a) { return tensor_algebra(opposite_algebra(a), a); }

} // namespace findom
