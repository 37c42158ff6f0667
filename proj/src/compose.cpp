#include "bincollatz/compose.hpp"

#include "bincollatz/error.hpp"

namespace bincollatz {

std::string CompositionPath::to_string() const
{
    std::string out;
    out.reserve(steps.size());
    for (CompositionStep s : steps)
        out.push_back(static_cast<char>(s));
    return out;
}

std::string CompositionPath::to_nested_string() const
{
    std::string out;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        out.push_back(static_cast<char>(*it));
        out.push_back('(');
    }
    out.push_back('1');
    out.append(steps.size(), ')');
    return out;
}

CompositionPath CompositionPath::parse(std::string_view text)
{
    CompositionPath path;
    path.steps.reserve(text.size());
    for (char c : text) {
        if (c == 'O')
            path.steps.push_back(CompositionStep::O);
        else if (c == 'E')
            path.steps.push_back(CompositionStep::E);
        else
            throw InvalidInput("composition step must be O or E, got '" + std::string(1, c) + "'");
    }
    return path;
}

BinaryNat apply(const CompositionPath& path)
{
    BinaryNat n;
    for (CompositionStep s : path.steps)
        n = n.append_bit(s == CompositionStep::O);
    return n;
}

CompositionPath decompose(const BinaryNat& n)
{
    // Bits after the leading 1, read MSB side first: 1 -> O, 0 -> E.
    CompositionPath path;
    std::size_t len = n.bit_length();
    path.steps.reserve(len - 1);
    for (std::size_t i = len - 1; i-- > 0;)
        path.steps.push_back(n.bit(i) ? CompositionStep::O : CompositionStep::E);
    return path;
}

BinaryNat f_inverse(const BinaryNat& n)
{
    if (n.is_one())
        throw DomainError("f^-1(1) would be 0, which is not a natural number here");
    return n.prefix(n.bit_length() - 1);
}

std::vector<BinaryNat> tree_path(const BinaryNat& n)
{
    std::size_t len = n.bit_length();
    std::vector<BinaryNat> out;
    out.reserve(len);
    for (std::size_t l = 1; l <= len; ++l)
        out.push_back(n.prefix(l));
    return out;
}

std::pair<BinaryNat, BinaryNat> tree_children(const BinaryNat& n)
{
    return {n.append_bit(false), n.append_bit(true)};
}

std::size_t tree_level(const BinaryNat& n)
{
    return n.bit_length();
}

std::vector<std::vector<BinaryNat>> subtree(std::size_t depth, std::size_t depth_cap)
{
    if (depth == 0)
        throw DomainError("subtree depth must be at least 1");
    if (depth > depth_cap)
        throw ResourceError("subtree depth " + std::to_string(depth) + " exceeds cap " + std::to_string(depth_cap));
    std::vector<std::vector<BinaryNat>> levels;
    levels.reserve(depth);
    levels.push_back({BinaryNat{}});
    while (levels.size() < depth) {
        const auto& parents = levels.back();
        std::vector<BinaryNat> next;
        next.reserve(parents.size() * 2);
        for (const auto& p : parents) {
            auto [left, right] = tree_children(p);
            next.push_back(std::move(left));
            next.push_back(std::move(right));
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

} // namespace bincollatz
