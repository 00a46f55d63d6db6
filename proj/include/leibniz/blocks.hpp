#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/scalar_io.hpp"

namespace leibniz {

enum class BlockKind { A, B, C, D, E, F };

inline char kind_letter(BlockKind k) { return static_cast<char>('A' + static_cast<int>(k)); }

using FormMatrix = Matrix<Scalar>;

/// One indecomposable congruence class: A_n, B_n(c), C_n, D_n, E_n, F_n.
struct CanonicalBlock {
    BlockKind kind = BlockKind::A;
    std::size_t size = 1;
    std::optional<Scalar> parameter;

    friend bool operator==(const CanonicalBlock&, const CanonicalBlock&) = default;

    bool is_skew_kind() const { return kind == BlockKind::F && size == 2; }

    std::string name() const {
        std::string s = kind_letter(kind) + std::to_string(size);
        if (parameter)
            s += "(" + parameter->to_string() + ")";
        return s;
    }

    void validate() const {
        const bool odd = size % 2 == 1;
        switch (kind) {
        case BlockKind::A:
        case BlockKind::C:
            if (!odd)
                throw InvalidBlock(name() + ": size must be odd");
            break;
        case BlockKind::D:
            if (odd || (size / 2) % 2 != 0)
                throw InvalidBlock(name() + ": size must be a multiple of 4");
            break;
        case BlockKind::F:
            if (odd || (size / 2) % 2 != 1)
                throw InvalidBlock(name() + ": size must be 2 mod 4");
            break;
        case BlockKind::B:
        case BlockKind::E:
            if (odd || size == 0)
                throw InvalidBlock(name() + ": size must be even");
            break;
        }
        if (size == 0)
            throw InvalidBlock("block size must be positive");
        if (kind == BlockKind::B) {
            if (!parameter)
                throw InvalidBlock(name() + ": B blocks need a parameter");
            if (parameter->is_constant()) {
                QI c = parameter->constant_value();
                if (c == QI(1) || c == QI(-1))
                    throw InvalidBlock(name() + ": parameter must differ from 1 and -1");
            }
        } else if (parameter) {
            throw InvalidBlock(name() + ": only B blocks take a parameter");
        }
    }
};

inline CanonicalBlock make_block(BlockKind kind, std::size_t size, std::optional<Scalar> parameter = std::nullopt) {
    CanonicalBlock b{kind, size, std::move(parameter)};
    b.validate();
    return b;
}

/// Output order: larger blocks first, then kind, then parameter.
inline bool block_less(const CanonicalBlock& a, const CanonicalBlock& b) {
    if (a.size != b.size)
        return a.size > b.size;
    if (a.kind != b.kind)
        return a.kind < b.kind;
    if (!a.parameter || !b.parameter)
        return !a.parameter && b.parameter;
    if (a.parameter->is_constant() && b.parameter->is_constant())
        return a.parameter->constant_value() < b.parameter->constant_value();
    if (a.parameter->is_constant() != b.parameter->is_constant())
        return a.parameter->is_constant();
    return a.parameter->to_string() < b.parameter->to_string();
}

/// The exact canonical matrix of a block.
inline FormMatrix canonical_block_matrix(const CanonicalBlock& b) {
    b.validate();
    const std::size_t n = b.size, k = n / 2;
    FormMatrix m(n, n);
    switch (b.kind) {
    case BlockKind::A:
        // [[0, I'], [J, 0]] with a (k+1)x(k+1) zero corner
        for (std::size_t i = 0; i < k; ++i) {
            m(i, k + 1 + i) = Scalar(1);
            m(k + 1 + i, i + 1) = Scalar(1);
        }
        break;
    case BlockKind::B:
    case BlockKind::D:
    case BlockKind::F: {
        // Off-diagonal k x k blocks, each an antidiagonal plus the diagonal right of it.
        Scalar u_anti(1), u_right(1), l_anti(1), l_right(1);
        if (b.kind == BlockKind::B) {
            u_right = *b.parameter;
            l_anti = *b.parameter;
        } else if (b.kind == BlockKind::D) {
            l_right = Scalar(-1);
        } else {
            l_anti = Scalar(-1);
        }
        for (std::size_t i = 0; i < k; ++i) {
            m(i, k + (k - 1 - i)) = u_anti;
            m(k + i, k - 1 - i) = l_anti;
            if (i >= 1) {
                m(i, k + (k - i)) = u_right;
                m(k + i, k - i) = l_right;
            }
        }
        break;
    }
    case BlockKind::C:
        for (std::size_t i = 0; i < n; ++i) {
            m(i, n - 1 - i) = Scalar(1);
            if (i >= 1)
                m(i, n - i) = i <= k ? Scalar(1) : Scalar(-1);
        }
        break;
    case BlockKind::E:
        for (std::size_t i = 0; i < n; ++i) {
            m(i, n - 1 - i) = i < k ? Scalar(1) : Scalar(-1);
            if (i >= 1)
                m(i, n - i) = Scalar(1);
        }
        break;
    }
    return m;
}

inline FormMatrix direct_sum_matrix(const std::vector<CanonicalBlock>& blocks) {
    std::vector<FormMatrix> ms;
    for (const auto& b : blocks)
        ms.push_back(canonical_block_matrix(b));
    return block_diagonal(ms);
}

/// Parses `kind size [ "(" scalar ")" ]`, e.g. `B4(1/2)`.
inline CanonicalBlock parse_block(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos >= text.size() || text[pos] < 'A' || text[pos] > 'F')
        throw ParseError("block must start with a kind letter A-F", 1, pos + 1);
    CanonicalBlock b;
    b.kind = static_cast<BlockKind>(text[pos] - 'A');
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        throw ParseError("block size expected", 1, pos + 1);
    b.size = std::stoul(std::string(text.substr(start, pos - start)));
    if (pos < text.size() && text[pos] == '(') {
        std::size_t close = text.rfind(')');
        if (close == std::string_view::npos || close < pos)
            throw ParseError("unclosed block parameter", 1, pos + 1);
        b.parameter = parse_scalar(text.substr(pos + 1, close - pos - 1));
        pos = close + 1;
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos != text.size())
        throw ParseError("trailing characters after block", 1, pos + 1);
    b.validate();
    return b;
}

/// Whitespace- or '+'-separated block list, e.g. `F2 B2(c) C1`.
inline std::vector<CanonicalBlock> parse_block_list(std::string_view text) {
    std::vector<CanonicalBlock> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '+'))
            ++pos;
        if (pos >= text.size())
            break;
        std::size_t end = pos;
        int depth = 0;
        while (end < text.size() &&
               (depth > 0 || !(std::isspace(static_cast<unsigned char>(text[end])) || text[end] == '+'))) {
            if (text[end] == '(')
                ++depth;
            else if (text[end] == ')')
                --depth;
            ++end;
        }
        out.push_back(parse_block(text.substr(pos, end - pos)));
        pos = end;
    }
    return out;
}

inline std::string block_list_to_string(const std::vector<CanonicalBlock>& blocks, const std::string& sep = " ") {
    std::string s;
    for (std::size_t k = 0; k < blocks.size(); ++k)
        s += (k ? sep : "") + blocks[k].name();
    return s;
}

} // namespace leibniz
