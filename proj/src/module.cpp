#include "findom/module.hpp"

#include <algorithm>
#include <random>

namespace findom {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    a ^= b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
    return a;
}

} // namespace

Matrix RightModule::action_of(const Vec& element) const {
    const PrimeField f = alg->field;
    Vec u(alg->dim, 0);
    { // word coordinates of the element
        Matrix col = alg->word_matrix_inv * as_column(f, element);
        for (std::size_t i = 0; i < alg->dim; ++i)
            u[i] = col.at(i, 0);
    }
    std::vector<Matrix> word_action(alg->dim, Matrix(f, dim, dim));
    Matrix acc(f, dim, dim);
    for (std::size_t s = 0; s < alg->dim; ++s) {
        const FiniteAlgebra::Word& w = alg->words[s];
        word_action[s] = w.parent < 0 ? idem_action[w.gen]
                                      : arrow_action[w.gen] * word_action[w.parent];
        if (u[s])
            acc = acc + word_action[s].scaled(u[s]);
    }
    return acc;
}

ModPtr make_module(AlgPtr alg, std::vector<Matrix> idem_action, std::vector<Matrix> arrow_action,
                   std::string label) {
    auto m = std::make_shared<RightModule>();
    m->alg = std::move(alg);
    m->dim = idem_action.empty() ? 0 : idem_action[0].rows();
    m->idem_action = std::move(idem_action);
    m->arrow_action = std::move(arrow_action);
    m->label = std::move(label);

    const PrimeField f = m->alg->field;
    std::size_t total = 0;
    Matrix p(f, m->dim, 0);
    for (const Matrix& e : m->idem_action) {
        Matrix b = column_space_basis(e);
        total += b.cols();
        p = Matrix::hstack(p, b);
        m->block_dim.push_back(b.cols());
        m->block_basis.push_back(std::move(b));
    }
    if (total != m->dim)
        throw ContractViolation("idempotent actions do not decompose the module");
    auto inv = inverse(p);
    if (!inv)
        throw ContractViolation("Peirce basis is singular");
    m->peirce = std::move(p);
    m->peirce_inv = std::move(*inv);
    return m;
}

ModPtr module_from_actions(AlgPtr alg, const std::vector<Matrix>& actions, std::string label) {
    if (actions.size() != alg->dim)
        throw InputError("need one action matrix per algebra basis element");
    const PrimeField f = alg->field;
    const std::size_t d = actions.empty() ? 0 : actions[0].rows();
    for (const Matrix& a : actions)
        if (a.rows() != d || a.cols() != d)
            throw InputError("module action matrices must be square of equal size");
    auto of_element = [&](const Vec& v) {
        Matrix r(f, d, d);
        for (std::size_t a = 0; a < alg->dim; ++a)
            if (v[a])
                r = r + actions[a].scaled(v[a]);
        return r;
    };
    if (!(of_element(alg->unit) == Matrix::identity(f, d)))
        throw InputError("unit does not act as identity on the module");
    for (std::size_t i = 0; i < alg->dim; ++i)
        for (std::size_t j = 0; j < alg->dim; ++j) {
            Vec bi(alg->dim, 0), bj(alg->dim, 0);
            bi[i] = 1;
            bj[j] = 1;
            // contravariant: action(b_i b_j) = action(b_j) action(b_i)
            if (!(of_element(alg->mul(bi, bj)) == actions[j] * actions[i]))
                throw InputError("module action does not respect multiplication at pair (" +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    std::vector<Matrix> idems, arrows;
    for (const Vec& e : alg->idempotents)
        idems.push_back(of_element(e));
    for (const auto& g : alg->arrows)
        arrows.push_back(of_element(g.element));
    return make_module(alg, std::move(idems), std::move(arrows), std::move(label));
}

std::optional<Vec> coordinates_in(const std::vector<Matrix>& basis, const Matrix& x) {
    const PrimeField f = x.field();
    const std::size_t len = x.rows() * x.cols();
    Matrix b(f, len, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j)
                b.at(i * x.cols() + j, k) = basis[k].at(i, j);
    Matrix target(f, len, 1);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            target.at(i * x.cols() + j, 0) = x.at(i, j);
    auto sol = solve(b, target);
    if (!sol)
        return std::nullopt;
    return column_of(*sol, 0);
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (g.source.get() != f.target.get())
        throw AlgebraMismatch("composition of non-composable maps");
    return {f.source, g.target, g.matrix * f.matrix};
}

AlgebraContext::AlgebraContext(AlgPtr a) : alg_(std::move(a)) {}

CtxPtr AlgebraContext::make(AlgPtr a) {
    auto ctx = std::shared_ptr<AlgebraContext>(new AlgebraContext(std::move(a)));
    ctx->build();
    return ctx;
}

void AlgebraContext::build() {
    const PrimeField f = alg_->field;
    const std::size_t d = alg_->dim;

    std::vector<Matrix> zi(alg_->idempotents.size(), Matrix(f, 0, 0));
    std::vector<Matrix> za(alg_->arrows.size(), Matrix(f, 0, 0));
    zero_ = make_module(alg_, zi, za, "0");

    std::vector<Matrix> ri, ra;
    for (const Vec& e : alg_->idempotents)
        ri.push_back(alg_->right_mult(e));
    for (const auto& g : alg_->arrows)
        ra.push_back(alg_->right_mult(g.element));
    regular_ = make_module(alg_, std::move(ri), std::move(ra), "A");

    for (std::size_t i = 0; i < alg_->simple_count(); ++i) {
        ModPtr p = submodule(regular_, alg_->vertex_basis[i]);
        projectives_.push_back(p);
    }
    for (std::size_t i = 0; i < alg_->simple_count(); ++i) {
        ModPtr p = projectives_[i];
        simples_.push_back(quotient(p, radical_part(*p)));
    }
    for (std::size_t i = 0; i < projectives_.size(); ++i) {
        auto pi = std::const_pointer_cast<RightModule>(projectives_[i]);
        pi->label = "P" + std::to_string(i + 1);
        auto si = std::const_pointer_cast<RightModule>(simples_[i]);
        si->label = "S" + std::to_string(i + 1);
    }
}

const AlgebraContext& AlgebraContext::op() const {
    if (auto back = op_back_.lock())
        return *back;
    std::lock_guard<std::mutex> lock(lazy_mutex_);
    if (!op_) {
        op_ = std::shared_ptr<AlgebraContext>(new AlgebraContext(opposite_algebra(alg_)));
        op_->build();
        op_->op_back_ = std::const_pointer_cast<AlgebraContext>(shared_from_this());
    }
    return *op_;
}

ModPtr AlgebraContext::injective(std::size_t i) const {
    {
        std::lock_guard<std::mutex> lock(lazy_mutex_);
        if (injectives_.size() > i && injectives_[i])
            return injectives_[i];
    }
    const AlgebraContext& o = op();
    ModPtr inj = o.dual(o.projective(i));
    auto named = std::const_pointer_cast<RightModule>(inj);
    named->label = "I" + std::to_string(i + 1);
    std::lock_guard<std::mutex> lock(lazy_mutex_);
    if (injectives_.size() <= i)
        injectives_.resize(alg_->simple_count());
    injectives_[i] = inj;
    return inj;
}

ModPtr AlgebraContext::dual_regular() const {
    {
        std::lock_guard<std::mutex> lock(lazy_mutex_);
        if (dual_regular_)
            return dual_regular_;
    }
    const AlgebraContext& o = op();
    ModPtr da = o.dual(o.regular());
    auto named = std::const_pointer_cast<RightModule>(da);
    named->label = "D(A)";
    std::lock_guard<std::mutex> lock(lazy_mutex_);
    dual_regular_ = da;
    return da;
}

ModPtr AlgebraContext::submodule(const ModPtr& m, const Matrix& basis_cols,
                                 ModuleMap* inclusion) const {
    std::vector<Matrix> idems, arrows;
    auto induced = [&](const Matrix& act) {
        auto sol = solve(basis_cols, act * basis_cols);
        if (!sol)
            throw ContractViolation("subspace is not action-invariant");
        return *sol;
    };
    for (const Matrix& e : m->idem_action)
        idems.push_back(induced(e));
    for (const Matrix& g : m->arrow_action)
        arrows.push_back(induced(g));
    ModPtr sub = make_module(m->alg, std::move(idems), std::move(arrows), "");
    if (inclusion)
        *inclusion = {sub, m, basis_cols};
    return sub;
}

ModPtr AlgebraContext::quotient(const ModPtr& m, const Matrix& sub_cols,
                                ModuleMap* projection) const {
    const PrimeField f = field();
    Matrix sub = column_space_basis(sub_cols);
    const std::size_t k = sub.cols();
    const std::size_t q = m->dim - k;
    // complete to a basis with standard vectors
    Echelon e = rref(Matrix::hstack(sub, Matrix::identity(f, m->dim)));
    Matrix t(f, m->dim, m->dim);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < m->dim; ++i)
            t.at(i, c) = sub.at(i, c);
    std::size_t filled = k;
    for (std::size_t c : e.pivots) {
        if (c < k)
            continue;
        t.at(c - k, filled) = 1;
        ++filled;
    }
    if (filled != m->dim)
        throw ContractViolation("basis completion failed");
    Matrix tinv = *inverse(t);
    auto induced = [&](const Matrix& act) {
        Matrix conj = tinv * act * t;
        Matrix r(f, q, q);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                r.at(i, j) = conj.at(k + i, k + j);
        return r;
    };
    std::vector<Matrix> idems, arrows;
    for (const Matrix& e2 : m->idem_action)
        idems.push_back(induced(e2));
    for (const Matrix& g : m->arrow_action)
        arrows.push_back(induced(g));
    ModPtr quot = make_module(m->alg, std::move(idems), std::move(arrows), "");
    if (projection)
        *projection = {m, quot, tinv.rows_slice(k, m->dim)};
    return quot;
}

ModPtr AlgebraContext::kernel(const ModuleMap& fmap, ModuleMap* inclusion) const {
    Matrix k = kernel_basis(fmap.matrix);
    return submodule(fmap.source, k, inclusion);
}

ModPtr AlgebraContext::cokernel(const ModuleMap& fmap, ModuleMap* projection) const {
    return quotient(fmap.target, column_space_basis(fmap.matrix), projection);
}

DirectSum AlgebraContext::direct_sum(const std::vector<ModPtr>& parts) const {
    const PrimeField f = field();
    std::size_t total = 0;
    for (const ModPtr& p : parts)
        total += p->dim;
    std::vector<Matrix> idems(alg_->idempotents.size(), Matrix(f, total, total));
    std::vector<Matrix> arrows(alg_->arrows.size(), Matrix(f, total, total));
    std::size_t off = 0;
    for (const ModPtr& p : parts) {
        for (std::size_t g = 0; g < idems.size(); ++g)
            for (std::size_t i = 0; i < p->dim; ++i)
                for (std::size_t j = 0; j < p->dim; ++j)
                    idems[g].at(off + i, off + j) = p->idem_action[g].at(i, j);
        for (std::size_t g = 0; g < arrows.size(); ++g)
            for (std::size_t i = 0; i < p->dim; ++i)
                for (std::size_t j = 0; j < p->dim; ++j)
                    arrows[g].at(off + i, off + j) = p->arrow_action[g].at(i, j);
        off += p->dim;
    }
    DirectSum out;
    out.module = make_module(alg_, std::move(idems), std::move(arrows), "");
    off = 0;
    for (const ModPtr& p : parts) {
        Matrix inj(f, total, p->dim), proj(f, p->dim, total);
        for (std::size_t i = 0; i < p->dim; ++i) {
            inj.at(off + i, i) = 1;
            proj.at(i, off + i) = 1;
        }
        out.injections.push_back({p, out.module, std::move(inj)});
        out.projections.push_back({out.module, p, std::move(proj)});
        off += p->dim;
    }
    return out;
}

Matrix AlgebraContext::invariant_closure(const RightModule& m, Matrix cols) const {
    Matrix span = column_space_basis(cols);
    for (;;) {
        std::size_t before = span.cols();
        Matrix bigger = span;
        for (const Matrix& e : m.idem_action)
            bigger = Matrix::hstack(bigger, e * span);
        for (const Matrix& g : m.arrow_action)
            bigger = Matrix::hstack(bigger, g * span);
        span = column_space_basis(bigger);
        if (span.cols() == before)
            return span;
    }
}

Matrix AlgebraContext::radical_part(const RightModule& m) const {
    const PrimeField f = field();
    Matrix seed(f, m.dim, 0);
    for (const Matrix& g : m.arrow_action)
        seed = Matrix::hstack(seed, g);
    return invariant_closure(m, column_space_basis(seed));
}

Matrix AlgebraContext::socle_part(const RightModule& m) const {
    const PrimeField f = field();
    if (m.arrow_action.empty())
        return Matrix::identity(f, m.dim);
    Matrix stacked = m.arrow_action[0];
    for (std::size_t g = 1; g < m.arrow_action.size(); ++g)
        stacked = Matrix::vstack(stacked, m.arrow_action[g]);
    return kernel_basis(stacked);
}

std::vector<std::size_t> AlgebraContext::top_multiplicities(const RightModule& m) const {
    Matrix rad = radical_part(m);
    std::vector<std::size_t> mult;
    for (std::size_t i = 0; i < alg_->simple_count(); ++i) {
        Matrix rad_i = column_space_basis(m.idem_action[i] * rad);
        mult.push_back(m.block_dim[i] - rad_i.cols());
    }
    return mult;
}

Cover AlgebraContext::projective_cover(const ModPtr& m) const {
    const PrimeField f = field();
    Matrix rad = radical_part(*m);

    std::vector<std::size_t> vertices;
    std::vector<Vec> lifts;
    for (std::size_t i = 0; i < alg_->simple_count(); ++i) {
        Matrix rad_i = column_space_basis(m->idem_action[i] * rad);
        // standard-basis completion of rad_i inside M e_i picks the lifts
        Echelon e = rref(Matrix::hstack(rad_i, m->block_basis[i]));
        for (std::size_t c : e.pivots) {
            if (c < rad_i.cols())
                continue;
            vertices.push_back(i);
            lifts.push_back(column_of(m->block_basis[i], c - rad_i.cols()));
        }
    }

    std::vector<ModPtr> parts;
    for (std::size_t v : vertices)
        parts.push_back(projectives_[v]);
    DirectSum sum = direct_sum(parts);

    std::size_t total_cols = sum.module->dim;
    Matrix cover(f, m->dim, total_cols);
    std::size_t off = 0;
    for (std::size_t c = 0; c < vertices.size(); ++c) {
        std::size_t v = vertices[c];
        // word value chain for the lift x
        Matrix vx(f, m->dim, alg_->dim);
        std::vector<Vec> chain(alg_->dim);
        for (std::size_t s = 0; s < alg_->dim; ++s) {
            const FiniteAlgebra::Word& w = alg_->words[s];
            Vec val;
            if (w.parent < 0) {
                Matrix col = m->idem_action[w.gen] * as_column(f, lifts[c]);
                val = column_of(col, 0);
            } else {
                Matrix col = m->arrow_action[w.gen] * as_column(f, chain[w.parent]);
                val = column_of(col, 0);
            }
            for (std::size_t i = 0; i < m->dim; ++i)
                vx.at(i, s) = val[i];
            chain[s] = std::move(val);
        }
        Matrix block = vx * alg_->vertex_words[v]; // m.dim x dim(P_v)
        for (std::size_t i = 0; i < m->dim; ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                cover.at(i, off + j) = block.at(i, j);
        off += block.cols();
    }

    Cover out;
    out.map = {sum.module, m, std::move(cover)};
    out.vertices = std::move(vertices);
    out.source = sum.module;
    return out;
}

ModPtr AlgebraContext::syzygy(const ModPtr& m, ModuleMap* inclusion, Cover* cover_out) const {
    Cover c = projective_cover(m);
    ModPtr k = kernel(c.map, inclusion);
    if (cover_out)
        *cover_out = std::move(c);
    return k;
}

ModPtr AlgebraContext::dual(const ModPtr& m) const {
    if (m->alg.get() != alg_.get())
        throw AlgebraMismatch("dual: module lives over a different algebra");
    const AlgebraContext& o = op();
    std::vector<Matrix> idems, arrows;
    for (const Matrix& e : m->idem_action)
        idems.push_back(e.transpose());
    for (const Matrix& g : m->arrow_action)
        arrows.push_back(g.transpose());
    return make_module(o.algebra(), std::move(idems), std::move(arrows),
                       m->label.empty() ? "" : "D(" + m->label + ")");
}

ModuleMap AlgebraContext::injective_envelope(const ModPtr& m) const {
    const AlgebraContext& o = op();
    ModPtr dm = dual(m);
    Cover c = o.projective_cover(dm);
    ModPtr env = o.dual(c.source); // module over this algebra again
    return {m, env, c.map.matrix.transpose()};
}

ModPtr AlgebraContext::cosyzygy(const ModPtr& m) const {
    ModuleMap env = injective_envelope(m);
    return cokernel(env);
}

bool AlgebraContext::is_projective_module(const ModPtr& m) const {
    Cover c = projective_cover(m);
    return c.source->dim == m->dim;
}

bool AlgebraContext::is_injective_module(const ModPtr& m) const {
    ModuleMap env = injective_envelope(m);
    return env.target->dim == m->dim;
}

bool AlgebraContext::selfinjective() const {
    for (std::size_t i = 0; i < alg_->simple_count(); ++i)
        if (!is_injective_module(projectives_[i]))
            return false;
    return true;
}

std::vector<Matrix> AlgebraContext::hom_space(const RightModule& m, const RightModule& n) const {
    if (m.alg.get() != n.alg.get())
        throw AlgebraMismatch("hom_space: modules over different algebras");
    const PrimeField f = field();
    const std::size_t nblocks = alg_->simple_count();

    // unknowns: block maps F_i : M e_i -> N e_i
    std::vector<std::size_t> offset(nblocks + 1, 0);
    for (std::size_t i = 0; i < nblocks; ++i)
        offset[i + 1] = offset[i] + n.block_dim[i] * m.block_dim[i];
    const std::size_t unknowns = offset[nblocks];
    if (unknowns == 0)
        return {};

    // block action of each arrow: C_g : blocks(from) -> blocks(to)
    auto block_map = [&](const RightModule& mod, std::size_t g) {
        const auto& arrow = alg_->arrows[g];
        Matrix img = mod.arrow_action[g] * mod.block_basis[arrow.from];
        auto sol = solve(mod.block_basis[arrow.to], img);
        if (!sol)
            throw ContractViolation("arrow action leaves the Peirce block");
        return *sol;
    };

    std::size_t rows = 0;
    for (const auto& arrow : alg_->arrows)
        rows += n.block_dim[arrow.to] * m.block_dim[arrow.from];
    Matrix sys(f, rows, unknowns);
    std::size_t row = 0;
    for (std::size_t g = 0; g < alg_->arrows.size(); ++g) {
        const auto& arrow = alg_->arrows[g];
        const std::size_t a = arrow.from, b = arrow.to;
        Matrix cm = block_map(m, g); // m.block_dim[b] x m.block_dim[a]
        Matrix cn = block_map(n, g);
        // F_b * cm - cn * F_a = 0
        for (std::size_t r = 0; r < n.block_dim[b]; ++r)
            for (std::size_t c = 0; c < m.block_dim[a]; ++c) {
                for (std::size_t k = 0; k < m.block_dim[b]; ++k)
                    sys.at(row, offset[b] + r * m.block_dim[b] + k) =
                        f.add(sys.at(row, offset[b] + r * m.block_dim[b] + k), cm.at(k, c));
                for (std::size_t k = 0; k < n.block_dim[a]; ++k)
                    sys.at(row, offset[a] + k * m.block_dim[a] + c) =
                        f.sub(sys.at(row, offset[a] + k * m.block_dim[a] + c), cn.at(r, k));
                ++row;
            }
    }

    Matrix sols = kernel_basis(sys);
    std::vector<Matrix> basis;
    for (std::size_t s = 0; s < sols.cols(); ++s) {
        Matrix bd(f, n.dim, m.dim);
        for (std::size_t i = 0; i < nblocks; ++i) {
            std::size_t roff = 0, coff = 0;
            for (std::size_t t = 0; t < i; ++t) {
                roff += n.block_dim[t];
                coff += m.block_dim[t];
            }
            for (std::size_t r = 0; r < n.block_dim[i]; ++r)
                for (std::size_t c = 0; c < m.block_dim[i]; ++c)
                    bd.at(roff + r, coff + c) = sols.at(offset[i] + r * m.block_dim[i] + c, s);
        }
        basis.push_back(n.peirce * bd * m.peirce_inv);
    }
    return basis;
}

std::size_t AlgebraContext::hom_dim(const RightModule& m, const RightModule& n) const {
    return hom_space(m, n).size();
}

std::uint32_t AlgebraContext::ext_dim(std::uint32_t degree, const ModPtr& m,
                                      const ModPtr& n) const {
    ProjResolution res(*this, m);
    return res.ext_dim(degree, *n);
}

IsoResult AlgebraContext::is_isomorphic(const ModPtr& m, const ModPtr& n,
                                        std::uint64_t seed) const {
    if (m->alg.get() != n->alg.get())
        throw AlgebraMismatch("is_isomorphic: modules over different algebras");
    if (m->dim != n->dim)
        return {false, true};
    if (m->dim == 0)
        return {true, true};
    if (m->block_dim != n->block_dim)
        return {false, true};
    // radical filtration fingerprint
    {
        Matrix rm = radical_part(*m), rn = radical_part(*n);
        while (rm.cols() || rn.cols()) {
            if (rm.cols() != rn.cols())
                return {false, true};
            for (std::size_t i = 0; i < alg_->simple_count(); ++i)
                if (rank(m->idem_action[i] * rm) != rank(n->idem_action[i] * rn))
                    return {false, true};
            Matrix seedm(field(), m->dim, 0), seedn(field(), n->dim, 0);
            for (std::size_t g = 0; g < m->arrow_action.size(); ++g) {
                seedm = Matrix::hstack(seedm, m->arrow_action[g] * rm);
                seedn = Matrix::hstack(seedn, n->arrow_action[g] * rn);
            }
            rm = invariant_closure(*m, seedm);
            rn = invariant_closure(*n, seedn);
        }
    }
    std::vector<Matrix> homs = hom_space(*m, *n);
    if (homs.empty())
        return {false, true};
    const PrimeField f = field();
    const std::size_t h = homs.size();

    double combos = 1;
    for (std::size_t i = 0; i < h && combos <= 4096; ++i)
        combos *= f.p;
    if (combos <= 4096) {
        std::vector<std::uint32_t> c(h, 0);
        for (;;) {
            std::size_t pos = 0;
            while (pos < h) {
                if (++c[pos] < f.p)
                    break;
                c[pos++] = 0;
            }
            if (pos == h)
                break;
            Matrix cand(f, n->dim, m->dim);
            for (std::size_t k = 0; k < h; ++k)
                if (c[k])
                    cand = cand + homs[k].scaled(c[k]);
            if (rank(cand) == m->dim)
                return {true, true};
        }
        return {false, true};
    }

    std::mt19937_64 rng(mix(seed, mix(m->dim, h * 2654435761ULL)));
    for (int trial = 0; trial < 64; ++trial) {
        Matrix cand(f, n->dim, m->dim);
        for (std::size_t k = 0; k < h; ++k) {
            std::uint32_t c = static_cast<std::uint32_t>(rng() % f.p);
            if (c)
                cand = cand + homs[k].scaled(c);
        }
        if (rank(cand) == m->dim)
            return {true, true};
    }
    return {false, false};
}

ModPtr AlgebraContext::ar_translate(const ModPtr& m) const {
    const PrimeField f = field();
    Cover c0 = projective_cover(m);
    ModuleMap incl;
    ModPtr k = kernel(c0.map, &incl);
    if (k->dim == 0)
        return zero_; // projective modules are killed by tau
    Cover c1 = projective_cover(k);
    Matrix d = incl.matrix * c1.map.matrix; // P1 -> P0

    const AlgebraContext& o = op();
    // Hom(-, A) turns the presentation into a map of right A^op-modules
    std::vector<Matrix> h0 = hom_space(*c0.source, *regular_);
    std::vector<Matrix> h1 = hom_space(*c1.source, *regular_);

    auto star_module = [&](const std::vector<Matrix>& basis) {
        std::vector<Matrix> idems, arrows;
        auto act = [&](const Vec& elt) {
            Matrix lm = alg_->left_mult(elt);
            Matrix r(f, basis.size(), basis.size());
            for (std::size_t kk = 0; kk < basis.size(); ++kk) {
                auto coords = coordinates_in(basis, lm * basis[kk]);
                if (!coords)
                    throw ContractViolation("Hom(-,A) action left its own span");
                for (std::size_t i = 0; i < basis.size(); ++i)
                    r.at(i, kk) = (*coords)[i];
            }
            return r;
        };
        for (const Vec& e : alg_->idempotents)
            idems.push_back(act(e));
        for (const auto& g : alg_->arrows)
            arrows.push_back(act(g.element));
        return make_module(o.algebra(), std::move(idems), std::move(arrows), "");
    };
    ModPtr p0star = star_module(h0);
    ModPtr p1star = star_module(h1);

    Matrix dstar(f, h1.size(), h0.size());
    for (std::size_t kk = 0; kk < h0.size(); ++kk) {
        auto coords = coordinates_in(h1, h0[kk] * d);
        if (!coords)
            throw ContractViolation("transpose map misses the hom basis");
        for (std::size_t i = 0; i < h1.size(); ++i)
            dstar.at(i, kk) = (*coords)[i];
    }
    ModPtr tr = o.cokernel({p0star, p1star, dstar});
    return o.dual(tr);
}

namespace {

struct Fingerprint {
    std::size_t dim;
    std::vector<std::size_t> blocks;
    std::vector<std::size_t> radical_layers;

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const AlgebraContext& ctx, const RightModule& m) {
    Fingerprint fp;
    fp.dim = m.dim;
    fp.blocks = m.block_dim;
    Matrix rad = ctx.radical_part(m);
    while (rad.cols()) {
        fp.radical_layers.push_back(rad.cols());
        Matrix seed(m.idem_action.empty() ? PrimeField() : m.alg->field, m.dim, 0);
        for (const Matrix& g : m.arrow_action)
            seed = Matrix::hstack(seed, g * rad);
        rad = ctx.invariant_closure(m, seed);
    }
    return fp;
}

} // namespace

ExtNat AlgebraContext::proj_dim_bounded(const ModPtr& m, std::uint32_t cutoff,
                                        std::uint64_t seed) const {
    ModPtr cur = m;
    std::vector<std::pair<Fingerprint, ModPtr>> seen;
    seen.push_back({fingerprint(*this, *cur), cur});
    for (std::uint32_t k = 0;; ++k) {
        Cover c = projective_cover(cur);
        if (c.source->dim == cur->dim)
            return ExtNat::finite(k);
        if (k == cutoff)
            return ExtNat::at_least(cutoff);
        cur = kernel(c.map);
        Fingerprint fp = fingerprint(*this, *cur);
        for (const auto& [prev_fp, prev] : seen)
            if (fp == prev_fp && is_isomorphic(cur, prev, seed).iso)
                return ExtNat::infinite();
        seen.push_back({std::move(fp), cur});
    }
}

ExtNat AlgebraContext::inj_dim_bounded(const ModPtr& m, std::uint32_t cutoff,
                                       std::uint64_t seed) const {
    return op().proj_dim_bounded(dual(m), cutoff, seed);
}

ExtNat AlgebraContext::domdim_module_bounded(const ModPtr& m, std::uint32_t cutoff,
                                             std::uint64_t seed) const {
    if (m->dim == 0)
        return ExtNat::infinite();
    ModPtr cur = m;
    std::vector<std::pair<Fingerprint, ModPtr>> seen;
    seen.push_back({fingerprint(*this, *cur), cur});
    for (std::uint32_t k = 0;; ++k) {
        ModuleMap env = injective_envelope(cur);
        if (!is_projective_module(env.target))
            return ExtNat::finite(k);
        if (env.target->dim == cur->dim)
            return ExtNat::infinite(); // cur injective, coresolution stops
        if (k == cutoff)
            return ExtNat::at_least(cutoff);
        cur = cokernel(env);
        Fingerprint fp = fingerprint(*this, *cur);
        for (const auto& [prev_fp, prev] : seen)
            if (fp == prev_fp && is_isomorphic(cur, prev, seed).iso)
                return ExtNat::infinite();
        seen.push_back({std::move(fp), cur});
    }
}

ExtNat AlgebraContext::domdim_algebra_bounded(std::uint32_t cutoff, std::uint64_t seed) const {
    if (selfinjective())
        return ExtNat::infinite();
    ExtNat result = ExtNat::infinite();
    for (std::size_t i = 0; i < alg_->simple_count(); ++i)
        result = ext_min(result, domdim_module_bounded(projectives_[i], cutoff, seed));
    return result;
}

ProjResolution::ProjResolution(const AlgebraContext& ctx, ModPtr m) : ctx_(ctx), m_(std::move(m)) {
    omegas_.push_back(m_);
    if (m_->dim == 0)
        finished_ = true;
}

void ProjResolution::extend(std::size_t steps) {
    while (covers_.size() < steps && !finished_) {
        ModPtr cur = omegas_.back();
        Cover c = ctx_.projective_cover(cur);
        ModuleMap incl;
        ModPtr k = ctx_.kernel(c.map, &incl);
        covers_.push_back(std::move(c));
        inclusions_.push_back(std::move(incl));
        omegas_.push_back(k);
        if (k->dim == 0)
            finished_ = true;
    }
}

ModPtr ProjResolution::omega(std::size_t t) const { return omegas_.at(t); }

Matrix ProjResolution::differential(std::size_t t) const {
    return inclusions_.at(t - 1).matrix * covers_.at(t).map.matrix;
}

std::uint32_t ProjResolution::ext_dim(std::uint32_t degree, const RightModule& n) {
    if (degree == 0)
        return static_cast<std::uint32_t>(ctx_.hom_dim(*m_, n));
    extend(degree + 1);
    if (degree >= covers_.size())
        return 0; // resolution already stopped
    auto delta_rank = [&](std::size_t t) -> std::size_t {
        // rank of Hom(P_t, N) -> Hom(P_{t+1}, N)
        if (t + 1 >= covers_.size())
            return 0;
        std::vector<Matrix> ht = ctx_.hom_space(*covers_[t].source, n);
        if (ht.empty())
            return 0;
        std::vector<Matrix> ht1 = ctx_.hom_space(*covers_[t + 1].source, n);
        Matrix d = differential(t + 1);
        Matrix img(n.alg->field, ht1.size(), ht.size());
        for (std::size_t k = 0; k < ht.size(); ++k) {
            auto coords = coordinates_in(ht1, ht[k] * d);
            if (!coords)
                throw ContractViolation("hom differential misses the hom basis");
            for (std::size_t i = 0; i < ht1.size(); ++i)
                img.at(i, k) = (*coords)[i];
        }
        return rank(img);
    };
    std::size_t hom_i = ctx_.hom_space(*covers_[degree].source, n).size();
    return static_cast<std::uint32_t>(hom_i - delta_rank(degree) - delta_rank(degree - 1));
}

ModPtr realize_interval(const AlgebraContext& ctx, Interval iv) {
    const AlgPtr& alg = ctx.algebra();
    if (!alg->series)
        throw ContractViolation("realize_interval needs a Kupisch path algebra");
    const KupischSeries& s = *alg->series;
    if (iv.top >= s.n() || iv.len < 1 || iv.len > s.entry(iv.top))
        throw InputError("interval " + iv.str() + " is invalid for " + s.str());
    const PrimeField f = alg->field;
    const std::uint32_t l = iv.len;

    // basis paths in from_kupisch order: (i,0) for all i, then (i,t), t >= 1
    std::vector<std::pair<std::size_t, std::uint32_t>> paths;
    for (std::size_t i = 0; i < s.n(); ++i)
        paths.push_back({i, 0});
    for (std::size_t i = 0; i < s.n(); ++i)
        for (std::uint32_t t = 1; t < s.entry(i); ++t)
            paths.push_back({i, t});

    // action of the path (v,t) on composition-factor positions: q -> q+t
    auto path_action = [&](std::size_t v, std::uint32_t t) {
        Matrix a(f, l, l);
        for (std::uint32_t q = 0; q < l; ++q)
            if (s.vertex(static_cast<long long>(iv.top) + q) == v && q + t < l)
                a.at(q + t, q) = 1;
        return a;
    };
    auto of_element = [&](const Vec& elt) {
        Matrix acc(f, l, l);
        for (std::size_t k = 0; k < paths.size(); ++k)
            if (elt[k])
                acc = acc + path_action(paths[k].first, paths[k].second).scaled(elt[k]);
        return acc;
    };
    std::vector<Matrix> idems, arrows;
    for (const Vec& e : alg->idempotents)
        idems.push_back(of_element(e));
    for (const auto& g : alg->arrows)
        arrows.push_back(of_element(g.element));
    return make_module(alg, std::move(idems), std::move(arrows), iv.str());
}

} // namespace findom
