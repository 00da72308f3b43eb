#include "deptree/tree.hpp"

#include <algorithm>
#include <utility>

namespace deptree {

struct DepTree::Node {
    std::vector<DepTree> left;
    std::vector<DepTree> right;
    std::size_t size = 1;

    Node() = default;
    Node(std::vector<DepTree> l, std::vector<DepTree> r) : left(std::move(l)), right(std::move(r)) {
        for (const auto& c : left) size += c.size();
        for (const auto& c : right) size += c.size();
    }
    Node(const Node&) = delete;
    Node& operator=(const Node&) = delete;

    // Unlinks uniquely owned descendants onto a heap stack so that releasing
    // a long chain never recurses.
    ~Node() {
        std::vector<DepTree> pending;
        auto drain = [&pending](std::vector<DepTree>& v) {
            for (auto& c : v) pending.push_back(std::move(c));
            v.clear();
        };
        drain(left);
        drain(right);
        while (!pending.empty()) {
            DepTree t = std::move(pending.back());
            pending.pop_back();
            if (t.node_ && t.node_.use_count() == 1) {
                // Sole owner: nobody else can observe the node any more.
                auto& n = const_cast<Node&>(*t.node_);
                drain(n.left);
                drain(n.right);
            }
        }
    }
};

DepTree::DepTree() : node_(shared_leaf()) {}

DepTree::DepTree(std::vector<DepTree> left, std::vector<DepTree> right)
    : node_(left.empty() && right.empty() ? shared_leaf()
                                          : std::make_shared<const Node>(std::move(left), std::move(right))) {}

const std::vector<DepTree>& DepTree::left() const { return node_->left; }
const std::vector<DepTree>& DepTree::right() const { return node_->right; }
std::size_t DepTree::size() const { return node_->size; }

std::shared_ptr<const DepTree::Node> DepTree::shared_leaf() {
    static const auto leaf = std::make_shared<const Node>();
    return leaf;
}

bool operator==(const DepTree& a, const DepTree& b) {
    std::vector<std::pair<const DepTree*, const DepTree*>> stack{{&a, &b}};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if (x->node_ == y->node_) continue;
        if (x->size() != y->size() || x->left().size() != y->left().size() ||
            x->right().size() != y->right().size())
            return false;
        for (std::size_t i = 0; i < x->left().size(); ++i) stack.emplace_back(&x->left()[i], &y->left()[i]);
        for (std::size_t i = 0; i < x->right().size(); ++i) stack.emplace_back(&x->right()[i], &y->right()[i]);
    }
    return true;
}

std::size_t Forest::total_size() const {
    std::size_t total = 0;
    for (const auto& t : trees) total += t.size();
    return total;
}

namespace {

void append_serialized(const DepTree& root, std::string& out) {
    // Each frame walks the children of one node; index counts through left
    // then right, emitting '|' in between.
    struct Frame {
        const DepTree* tree;
        std::size_t index;
    };
    out.reserve(out.size() + 3 * root.size());
    out.push_back('[');
    std::vector<Frame> stack{{&root, 0}};
    while (!stack.empty()) {
        auto& f = stack.back();
        const auto& l = f.tree->left();
        const auto& r = f.tree->right();
        if (f.index == l.size()) out.push_back('|');
        if (f.index == l.size() + r.size()) {
            out.push_back(']');
            stack.pop_back();
            continue;
        }
        const DepTree* child = f.index < l.size() ? &l[f.index] : &r[f.index - l.size()];
        ++f.index;
        out.push_back('[');
        stack.push_back({child, 0});
    }
}

}  // namespace

std::string serialize(const DepTree& t) {
    std::string out;
    append_serialized(t, out);
    return out;
}

std::string serialize(const Forest& f) {
    std::string out;
    for (const auto& t : f.trees) append_serialized(t, out);
    return out;
}

DepTree parse(std::string_view text) {
    struct Frame {
        std::vector<DepTree> left;
        std::vector<DepTree> right;
        bool seen_bar = false;
    };
    auto fail = [](const std::string& msg, std::size_t pos) -> parse_error {
        return parse_error("parse error at offset " + std::to_string(pos) + ": " + msg, pos);
    };

    std::vector<Frame> stack;
    std::size_t pos = 0;
    if (text.empty()) throw fail("empty input, expected '['", 0);
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        switch (c) {
        case '[':
            stack.emplace_back();
            break;
        case '|':
            if (stack.empty()) throw fail("expected '['", pos);
            if (stack.back().seen_bar) throw fail("second '|' in one node", pos);
            stack.back().seen_bar = true;
            break;
        case ']': {
            if (stack.empty()) throw fail("expected '['", pos);
            if (!stack.back().seen_bar) throw fail("']' before '|'", pos);
            Frame done = std::move(stack.back());
            stack.pop_back();
            DepTree t(std::move(done.left), std::move(done.right));
            if (stack.empty()) {
                if (pos + 1 != text.size()) throw fail("trailing characters after tree", pos + 1);
                return t;
            }
            auto& parent = stack.back();
            (parent.seen_bar ? parent.right : parent.left).push_back(std::move(t));
            break;
        }
        default:
            throw fail(std::string("unexpected character '") + c + "'", pos);
        }
    }
    throw fail("unexpected end of input (unclosed '[')", text.size());
}

oracle_limit_error::oracle_limit_error(std::size_t requested, std::size_t limit)
    : std::out_of_range("size " + std::to_string(requested) + " exceeds the enumeration oracle limit of " +
                        std::to_string(limit)),
      limit_(limit) {}

namespace {

// All trees of sizes 1..max_trees and all forests of sizes 0..max_forests,
// unsorted. Subtrees are shared between the results.
struct Catalogue {
    std::vector<std::vector<DepTree>> trees;
    std::vector<std::vector<Forest>> forests;
};

Catalogue build_catalogue(std::size_t max_trees, std::size_t max_forests) {
    Catalogue cat;
    const std::size_t top = std::max(max_trees, max_forests);
    cat.trees.resize(top + 1);
    cat.forests.resize(top + 1);
    cat.forests[0].push_back(Forest{});
    for (std::size_t n = 1; n <= top; ++n) {
        auto& trees = cat.trees[n];
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& l : cat.forests[i])
                for (const auto& r : cat.forests[n - 1 - i]) trees.emplace_back(l.trees, r.trees);
        }
        if (n > max_forests) continue;
        auto& forests = cat.forests[n];
        for (std::size_t k = 1; k <= n; ++k) {
            for (const auto& head : cat.trees[k]) {
                for (const auto& tail : cat.forests[n - k]) {
                    Forest f;
                    f.trees.reserve(1 + tail.trees.size());
                    f.trees.push_back(head);
                    f.trees.insert(f.trees.end(), tail.trees.begin(), tail.trees.end());
                    forests.push_back(std::move(f));
                }
            }
        }
    }
    return cat;
}

template <typename T>
std::vector<T> sorted_by_serialization(std::vector<T> items) {
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) keys.emplace_back(serialize(items[i]), i);
    std::sort(keys.begin(), keys.end());
    std::vector<T> out;
    out.reserve(items.size());
    for (const auto& [key, i] : keys) out.push_back(std::move(items[i]));
    return out;
}

}  // namespace

std::vector<DepTree> enumerate_trees(std::size_t n, std::size_t oracle_limit) {
    if (n == 0) throw std::invalid_argument("tree size must be at least 1");
    if (n > oracle_limit) throw oracle_limit_error(n, oracle_limit);
    auto cat = build_catalogue(n, n - 1);
    return sorted_by_serialization(std::move(cat.trees[n]));
}

std::vector<Forest> enumerate_forests(std::size_t m, std::size_t oracle_limit) {
    if (m > oracle_limit) throw oracle_limit_error(m, oracle_limit);
    auto cat = build_catalogue(m, m);
    return sorted_by_serialization(std::move(cat.forests[m]));
}

}  // namespace deptree
