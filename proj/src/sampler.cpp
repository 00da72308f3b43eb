#include "deptree/sampler.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deptree {

BigNat SamplerState::uniform_below(const BigNat& bound) {
    if (sgn(bound) <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
    if (bound == 1) return 0;
    const BigNat top = bound - 1;
    const std::size_t bits = bit_length(top);
    const std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> buffer(words);
    BigNat candidate;
    // Acceptance probability is above 1/2 per round.
    while (true) {
        for (auto& w : buffer) w = rng_();
        mpz_import(candidate.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buffer.data());
        mpz_fdiv_r_2exp(candidate.get_mpz_t(), candidate.get_mpz_t(), bits);
        if (candidate < bound) return candidate;
    }
}

std::size_t SamplerState::choose(std::span<const BigNat> weights, const BigNat& total) {
    BigNat r = uniform_below(total);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (r < weights[i]) return i;
        r -= weights[i];
    }
    throw std::logic_error("sampler weights do not sum to their stated total");
}

namespace {

void check_range(std::size_t size, const CountTable& table, const char* what) {
    if (size > table.max_n())
        throw std::out_of_range(std::string(what) + " size " + std::to_string(size) +
                                " exceeds the count table size " + std::to_string(table.max_n()));
}

// Explicit-stack sampler. A tree frame draws its (left, right) split, then
// collects a left forest and a right forest from child frames. A forest
// frame draws the size of its next tree and collects trees until its
// remaining size reaches zero.
class Decomposer {
public:
    Decomposer(const CountTable& table, ChoiceSource& choices) : table_(table), choices_(choices) {}

    DepTree tree(std::size_t n) {
        push_tree(n);
        run();
        return std::move(*returned_tree_);
    }

    Forest forest(std::size_t m) {
        push_forest(m);
        run();
        return Forest{std::move(*returned_forest_)};
    }

private:
    enum class Kind { Tree, Forest };

    struct Frame {
        Kind kind = Kind::Tree;
        std::size_t size = 0;    // tree: node count; forest: remaining size
        int stage = 0;           // tree only
        std::size_t right_size = 0;
        std::vector<DepTree> first;  // tree: left children; forest: trees so far
    };

    void push(Kind kind, std::size_t size) {
        stack_.emplace_back();
        stack_.back().kind = kind;
        stack_.back().size = size;
    }
    void push_tree(std::size_t n) { push(Kind::Tree, n); }
    void push_forest(std::size_t m) { push(Kind::Forest, m); }

    // Split weights s_i s_{n-1-i}, i = 0..n-1; they sum to t_n.
    std::size_t draw_split(std::size_t n) {
        weights_.resize(n);
        for (std::size_t i = 0; i < n; ++i) weights_[i] = table_.forests(i) * table_.forests(n - 1 - i);
        return choices_.choose(weights_, table_.trees(n));
    }

    // First-tree weights t_k s_{m-k}, k = 1..m; they sum to s_m.
    std::size_t draw_first_tree(std::size_t m) {
        weights_.resize(m);
        for (std::size_t k = 1; k <= m; ++k) weights_[k - 1] = table_.trees(k) * table_.forests(m - k);
        return choices_.choose(weights_, table_.forests(m)) + 1;
    }

    void run() {
        while (!stack_.empty()) {
            Frame& f = stack_.back();
            if (f.kind == Kind::Tree) {
                switch (f.stage) {
                case 0: {
                    const std::size_t left = draw_split(f.size);
                    f.right_size = f.size - 1 - left;
                    f.stage = 1;
                    push_forest(left);
                    break;
                }
                case 1:
                    f.first = take_forest();
                    f.stage = 2;
                    push_forest(f.right_size);
                    break;
                default: {
                    DepTree t(std::move(f.first), take_forest());
                    stack_.pop_back();
                    returned_tree_ = std::move(t);
                    break;
                }
                }
                continue;
            }
            if (returned_tree_) {
                f.size -= returned_tree_->size();
                f.first.push_back(std::move(*returned_tree_));
                returned_tree_.reset();
            }
            if (f.size == 0) {
                returned_forest_ = std::move(f.first);
                stack_.pop_back();
            } else {
                push_tree(draw_first_tree(f.size));
            }
        }
    }

    std::vector<DepTree> take_forest() {
        std::vector<DepTree> out = std::move(*returned_forest_);
        returned_forest_.reset();
        return out;
    }

    const CountTable& table_;
    ChoiceSource& choices_;
    std::vector<Frame> stack_;
    std::vector<BigNat> weights_;
    std::optional<DepTree> returned_tree_;
    std::optional<std::vector<DepTree>> returned_forest_;
};

}  // namespace

DepTree sample_tree(std::size_t n, const CountTable& table, ChoiceSource& choices) {
    if (n == 0) throw std::invalid_argument("sample_tree: n must be at least 1");
    check_range(n, table, "tree");
    return Decomposer(table, choices).tree(n);
}

Forest sample_forest(std::size_t m, const CountTable& table, ChoiceSource& choices) {
    check_range(m, table, "forest");
    return Decomposer(table, choices).forest(m);
}

DepTree sample_tree(std::size_t n, SamplerState& state) { return sample_tree(n, state.table(), state); }

Forest sample_forest(std::size_t m, SamplerState& state) { return sample_forest(m, state.table(), state); }

}  // namespace deptree
