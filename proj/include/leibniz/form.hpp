#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/blocks.hpp"
#include "leibniz/pencil.hpp"

namespace leibniz {

// ---------------------------------------------------------------------------
// Forms and algebras

/// Nilpotent algebra with [x_i, x_j] = N(i, j) x_n and x_n central.
inline StructureConstants algebra_from_blocks(const std::vector<CanonicalBlock>& blocks) {
    const FormMatrix nm = direct_sum_matrix(blocks);
    const std::size_t m = nm.rows();
    StructureConstants a(m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a.at(i, j, m) = nm(i, j);
    for (const auto& b : blocks)
        if (b.parameter)
            for (const auto& p : b.parameter->parameters())
                a.constraints = merge_constraints(a.constraints, {b_parameter_constraint(p)});
    return a;
}

struct FormExtraction {
    FormMatrix form;
    Vec derived;                         // spanning vector of A^2
    std::size_t pivot = 0;               // its echelon pivot
    std::vector<std::size_t> complement; // coordinates spanning V
};

/// The bilinear form f on the coordinate complement of A^2 = span{x_n}.
inline FormExtraction form_from_algebra(const StructureConstants& a) {
    if (!verify_leibniz(a))
        throw PreconditionFailed("not a Leibniz algebra");
    const Subspace d = derived_algebra(a);
    if (d.dim() != 1)
        throw PreconditionFailed("dim A^2 is " + std::to_string(d.dim()) + ", expected 1");
    if (!is_nilpotent(a))
        throw PreconditionFailed("algebra is not nilpotent");
    FormExtraction out;
    out.derived = d.basis().row_vector(0);
    out.pivot = d.pivots()[0];
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (i != out.pivot)
            out.complement.push_back(i);
    const std::size_t m = out.complement.size();
    out.form = FormMatrix(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
            out.form(r, c) = a.at(out.complement[r], out.complement[c], out.pivot);
    return out;
}

/// Some v != 0 with M v = 0 and M^T v = 0.
inline bool has_zero_summand(const FormMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return false;
    FormMatrix stacked(2 * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            stacked(i, j) = m(i, j);
            stacked(n + i, j) = m(j, i);
        }
    return rank(stacked) < n;
}

/// For a block list with an A1 summand: the ideal spanned by the A1
/// coordinates, and the ideal spanned by the other coordinates and x_n.
inline std::optional<std::pair<Subspace, Subspace>> zero_summand_ideals(const std::vector<CanonicalBlock>& blocks) {
    std::size_t m = 0;
    std::vector<Vec> zero_part, rest;
    for (const auto& b : blocks)
        m += b.size;
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        const bool zero = b.kind == BlockKind::A && b.size == 1;
        for (std::size_t k = 0; k < b.size; ++k)
            (zero ? zero_part : rest).push_back(basis_vector(m + 1, offset + k));
        offset += b.size;
    }
    if (zero_part.empty())
        return std::nullopt;
    rest.push_back(basis_vector(m + 1, m));
    return std::make_pair(Subspace::span(rest, m + 1), Subspace::span(zero_part, m + 1));
}

// ---------------------------------------------------------------------------
// Constant matrices

inline Matrix<QI> to_constant(const FormMatrix& m) {
    return map_matrix<QI>(m, [](const Scalar& s) { return s.constant_value(); });
}

inline FormMatrix to_form(const Matrix<QI>& m) {
    return map_matrix<Scalar>(m, [](const QI& q) { return Scalar(q); });
}

inline PencilInvariants pencil_invariants(const FormMatrix& m) { return pencil_invariants(to_constant(m)); }

inline bool is_congruent(const FormMatrix& m, const FormMatrix& n) {
    if (m.rows() != n.rows())
        return false;
    return pencil_invariants(m) == pencil_invariants(n);
}

template <class T>
Matrix<T> congruence_transform(const Matrix<T>& m, const Matrix<T>& s) {
    return s.transpose() * m * s;
}

// ---------------------------------------------------------------------------
// Canonical decomposition

/// Representative of {c, 1/c}: the smaller under the (re, im) order.
inline QI normalize_b_parameter(const QI& c) {
    if (c.is_zero())
        return c;
    QI r = c.inv();
    return r < c ? r : c;
}

/// Normalizes constant B parameters and sorts.
inline std::vector<CanonicalBlock> normalize_blocks(std::vector<CanonicalBlock> blocks) {
    for (auto& b : blocks)
        if (b.kind == BlockKind::B && b.parameter && b.parameter->is_constant())
            b.parameter = Scalar(normalize_b_parameter(b.parameter->constant_value()));
    std::sort(blocks.begin(), blocks.end(), block_less);
    return blocks;
}

namespace detail {

struct Atom {
    char tag; // L, R: minimal indices; F: finite divisor; I: infinite divisor
    unsigned value;
    UPoly base;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend bool operator<(const Atom& a, const Atom& b) {
        if (a.tag != b.tag)
            return a.tag < b.tag;
        if (a.value != b.value)
            return a.value < b.value;
        return upoly_less(a.base, b.base);
    }
};

inline std::vector<Atom> atoms_of(const PencilInvariants& p) {
    std::vector<Atom> out;
    for (auto e : p.left_indices)
        out.push_back({'L', e, {}});
    for (auto e : p.right_indices)
        out.push_back({'R', e, {}});
    for (const auto& d : p.finite)
        out.push_back({'F', d.exponent, d.base});
    for (auto e : p.infinite)
        out.push_back({'I', e, {}});
    std::sort(out.begin(), out.end());
    return out;
}

/// rest = all \ part when part is a sub-multiset (both sorted).
inline std::optional<std::vector<Atom>> subtract(const std::vector<Atom>& all, const std::vector<Atom>& part) {
    std::vector<Atom> rest;
    std::size_t j = 0;
    for (const auto& a : all) {
        if (j < part.size() && a == part[j])
            ++j;
        else
            rest.push_back(a);
    }
    if (j != part.size())
        return std::nullopt;
    return rest;
}

struct BlockEntry {
    CanonicalBlock block;
    std::vector<Atom> atoms;
    std::size_t rank;
};

inline const BlockEntry& dictionary_entry(const CanonicalBlock& b) {
    static std::mutex mu;
    static std::map<std::string, BlockEntry> memo;
    const std::string key = b.name();
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it == memo.end()) {
        PencilInvariants inv = pencil_invariants(canonical_block_matrix(b));
        it = memo.emplace(key, BlockEntry{b, atoms_of(inv), inv.rank}).first;
    }
    return it->second;
}

/// Blocks of size <= n that can occur in a matrix with invariants p.
inline std::vector<const BlockEntry*> candidate_blocks(const PencilInvariants& p) {
    const std::size_t n = p.size;
    std::vector<QI> params;
    auto add_param = [&](const QI& c) {
        if (c == QI(1) || c == QI(-1))
            return;
        QI v = normalize_b_parameter(c);
        if (std::find(params.begin(), params.end(), v) == params.end())
            params.push_back(v);
    };
    for (const auto& d : p.finite) {
        if (d.base.degree() != 1)
            continue;
        const QI r = -d.base.coeff(0);
        if (r.is_zero()) {
            add_param(QI(0));
            continue;
        }
        for (const QI& c : {r, -r, r.inv(), -r.inv()})
            add_param(c);
    }
    if (!p.infinite.empty())
        add_param(QI(0));
    std::sort(params.begin(), params.end());

    const auto input = atoms_of(p);
    std::vector<const BlockEntry*> out;
    auto consider = [&](const CanonicalBlock& b) {
        const BlockEntry& e = dictionary_entry(b);
        if (subtract(input, e.atoms))
            out.push_back(&e);
    };
    for (std::size_t s = n; s >= 1; --s) {
        if (s % 2 == 1) {
            consider({BlockKind::A, s, std::nullopt});
            consider({BlockKind::C, s, std::nullopt});
            continue;
        }
        for (const QI& c : params)
            consider({BlockKind::B, s, Scalar(c)});
        if ((s / 2) % 2 == 0)
            consider({BlockKind::D, s, std::nullopt});
        consider({BlockKind::E, s, std::nullopt});
        if ((s / 2) % 2 == 1)
            consider({BlockKind::F, s, std::nullopt});
    }
    return out;
}

inline bool decompose_search(const std::vector<Atom>& rest, std::size_t size_left, std::size_t rank_left,
                             const std::vector<const BlockEntry*>& candidates, std::vector<CanonicalBlock>& acc) {
    if (rest.empty())
        return size_left == 0 && rank_left == 0;
    const Atom& first = rest.front();
    for (const BlockEntry* e : candidates) {
        if (e->block.size > size_left || e->rank > rank_left)
            continue;
        if (std::find(e->atoms.begin(), e->atoms.end(), first) == e->atoms.end())
            continue;
        auto next = subtract(rest, e->atoms);
        if (!next)
            continue;
        acc.push_back(e->block);
        if (decompose_search(*next, size_left - e->block.size, rank_left - e->rank, candidates, acc))
            return true;
        acc.pop_back();
    }
    return false;
}

} // namespace detail

/// The block multiset congruent to a constant matrix, normalized and sorted.
inline std::vector<CanonicalBlock> canonical_decomposition(const Matrix<QI>& m) {
    const PencilInvariants p = pencil_invariants(m);
    if (!p.consistent())
        throw Error("inconsistent pencil invariants: " + p.to_string());
    std::vector<CanonicalBlock> acc;
    if (!detail::decompose_search(detail::atoms_of(p), p.size, p.rank, detail::candidate_blocks(p), acc))
        throw DictionaryMiss("no block combination matches " + p.to_string());
    return normalize_blocks(std::move(acc));
}

inline std::vector<CanonicalBlock> canonical_decomposition(const FormMatrix& m) {
    return canonical_decomposition(to_constant(m));
}

/// Searches for S = (permutation) * (diagonal) with S^T M S = N.
inline std::optional<Matrix<QI>> monomial_congruence_witness(const Matrix<QI>& m, const Matrix<QI>& n) {
    const std::size_t sz = m.rows();
    if (n.rows() != sz)
        return std::nullopt;
    std::vector<std::size_t> perm(sz);
    std::vector<bool> used(sz, false);

    auto solve_scaling = [&]() -> std::optional<Matrix<QI>> {
        std::vector<std::optional<QI>> d(sz);
        auto mp = [&](std::size_t i, std::size_t j) -> const QI& { return m(perm[i], perm[j]); };
        for (std::size_t root = 0; root < sz; ++root) {
            if (d[root])
                continue;
            if (!n(root, root).is_zero()) {
                auto s = qi_sqrt(n(root, root) / mp(root, root));
                if (!s)
                    return std::nullopt;
                d[root] = *s;
            } else {
                d[root] = QI(1);
            }
            std::vector<std::size_t> stack{root};
            while (!stack.empty()) {
                std::size_t i = stack.back();
                stack.pop_back();
                for (std::size_t j = 0; j < sz; ++j) {
                    if (d[j])
                        continue;
                    if (!n(i, j).is_zero()) {
                        d[j] = n(i, j) / (*d[i] * mp(i, j));
                    } else if (!n(j, i).is_zero()) {
                        d[j] = n(j, i) / (*d[i] * mp(j, i));
                    } else {
                        continue;
                    }
                    stack.push_back(j);
                }
            }
        }
        Matrix<QI> s(sz, sz);
        for (std::size_t i = 0; i < sz; ++i)
            s(perm[i], i) = *d[i];
        if (congruence_transform(m, s) == n)
            return s;
        return std::nullopt;
    };

    std::function<std::optional<Matrix<QI>>(std::size_t)> assign = [&](std::size_t t) -> std::optional<Matrix<QI>> {
        if (t == sz)
            return solve_scaling();
        for (std::size_t c = 0; c < sz; ++c) {
            if (used[c])
                continue;
            perm[t] = c;
            bool ok = true;
            for (std::size_t a = 0; a <= t && ok; ++a)
                ok = m(perm[a], c).is_zero() == n(a, t).is_zero() && m(c, perm[a]).is_zero() == n(t, a).is_zero();
            if (!ok)
                continue;
            used[c] = true;
            auto r = assign(t + 1);
            used[c] = false;
            if (r)
                return r;
        }
        return std::nullopt;
    };
    return assign(0);
}

// ---------------------------------------------------------------------------
// Matrix text format: rows separated by ';', entries by ','.

inline FormMatrix parse_matrix(std::string_view text) {
    auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
    std::size_t b = 0, e = text.size();
    while (b < e && is_space(text[b]))
        ++b;
    while (e > b && is_space(text[e - 1]))
        --e;
    if (b == e)
        return FormMatrix(0, 0);
    std::vector<std::vector<Scalar>> rows;
    std::size_t start = b;
    for (std::size_t pos = b; pos <= e; ++pos) {
        if (pos < e && text[pos] != ';')
            continue;
        std::vector<Scalar> row;
        std::size_t cell = start;
        for (std::size_t q = start; q <= pos; ++q) {
            if (q < pos && text[q] != ',')
                continue;
            std::string_view entry = text.substr(cell, q - cell);
            try {
                row.push_back(parse_scalar(entry));
            } catch (const ParseError& err) {
                std::size_t line = 1, col = 1;
                for (std::size_t k = 0; k < cell; ++k) {
                    if (text[k] == '\n') {
                        ++line;
                        col = 1;
                    } else {
                        ++col;
                    }
                }
                throw ParseError(std::string("matrix entry: ") + err.what(), line, col);
            }
            cell = q + 1;
        }
        rows.push_back(std::move(row));
        start = pos + 1;
    }
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        if (rows[i].size() != n)
            throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                             " entries; expected a square " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    return FormMatrix::from_rows(rows, n);
}

template <class T>
std::string matrix_to_string(const Matrix<T>& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i)
            s += ';';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                s += ',';
            s += m(i, j).to_string();
        }
    }
    return s;
}

} // namespace leibniz
