#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deptree {

/// Largest size accepted by the exhaustive enumerators unless the caller
/// raises it explicitly.
inline constexpr std::size_t kDefaultOracleLimit = 10;

/// A dependency tree: a root with an ordered list of left subtrees and an
/// ordered list of right subtrees.
///
/// Trees are immutable values. Copies share structure, so enumerating all
/// trees of a size reuses the subtrees of smaller sizes instead of cloning
/// them. Every traversal in this library (serialize, parse, comparison,
/// destruction) runs on an explicit stack, so arbitrarily deep chains are
/// safe.
class DepTree {
public:
    /// The single-node tree.
    DepTree();
    DepTree(std::vector<DepTree> left, std::vector<DepTree> right);

    static DepTree leaf() { return DepTree(); }

    const std::vector<DepTree>& left() const;
    const std::vector<DepTree>& right() const;

    /// Number of nodes; cached at construction.
    std::size_t size() const;
    std::size_t child_count() const { return left().size() + right().size(); }
    bool is_leaf() const { return child_count() == 0; }

    friend bool operator==(const DepTree& a, const DepTree& b);

private:
    struct Node;
    static std::shared_ptr<const Node> shared_leaf();

    std::shared_ptr<const Node> node_;
};

/// An ordered, possibly empty, sequence of trees.
struct Forest {
    std::vector<DepTree> trees;

    std::size_t total_size() const;
    friend bool operator==(const Forest&, const Forest&) = default;
};

inline std::size_t size(const DepTree& t) { return t.size(); }

/// Canonical text form: tree := "[" tree* "|" tree* "]".
std::string serialize(const DepTree& t);

/// Serialization of each tree in order, concatenated.
std::string serialize(const Forest& f);

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}

    /// Byte offset of the first offending character (input length when the
    /// input ended early).
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Inverse of serialize. The whole input must be exactly one tree.
DepTree parse(std::string_view text);

/// Thrown when an exhaustive enumeration is asked for a size above its limit.
class oracle_limit_error : public std::out_of_range {
public:
    oracle_limit_error(std::size_t requested, std::size_t limit);
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

/// Every tree with exactly `n` nodes, each once, sorted by serialization.
std::vector<DepTree> enumerate_trees(std::size_t n, std::size_t oracle_limit = kDefaultOracleLimit);

/// Every forest of total size `m`, sorted by serialization.
std::vector<Forest> enumerate_forests(std::size_t m, std::size_t oracle_limit = kDefaultOracleLimit);

}  // namespace deptree
