#include "liquidpower/game.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "liquidpower/partition.hpp"

namespace liquidpower {

WeightedVotingGame::WeightedVotingGame(std::vector<std::int64_t> weights, Rational quota)
    : weights_(std::move(weights)), quota_(quota) {
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] < 1)
            throw std::invalid_argument("WeightedVotingGame: weight of voter " +
                                        std::to_string(i) + " must be >= 1");
        total_ += weights_[i];
    }
    if (quota_ < Rational(1, 2) || quota_ > Rational(1, 1))
        throw std::invalid_argument("WeightedVotingGame: quota must lie in [0.5, 1], got " +
                                    quota_.str());
}

int WeightedVotingGame::outcome(std::int64_t plus_weight, std::int64_t active_weight) const {
    // plus > q * active, cross-multiplied to stay in integers
    const __int128 lhs = static_cast<__int128>(plus_weight) * quota_.den();
    const __int128 rhs = static_cast<__int128>(active_weight) * quota_.num();
    return lhs > rhs ? 1 : -1;
}

int wvg_outcome(const DirectVotePartition& votes, const WeightedVotingGame& game) {
    if (votes.size() != game.size())
        throw std::invalid_argument("wvg_outcome: profile size != game size");
    std::int64_t plus = 0, active = 0;
    for (int i = 0; i < votes.size(); ++i) {
        const int v = votes.vote(i);
        if (v == 0) continue;
        active += game.weight(i);
        if (v > 0) plus += game.weight(i);
    }
    return game.outcome(plus, active);
}

int criticality_delta(int voter,
                      std::span<const int> supporters,
                      std::span<const int> opposers,
                      std::span<const int> followers,
                      const WeightedVotingGame& game) {
    std::vector<signed char> role(game.size(), 0);
    auto claim = [&](std::span<const int> set, signed char tag) {
        for (int v : set) {
            if (v < 0 || v >= game.size())
                throw std::invalid_argument("criticality_delta: voter id out of range");
            if (v == voter || role[v] != 0)
                throw std::invalid_argument("criticality_delta: sets must be disjoint and "
                                            "exclude the probed voter");
            role[v] = tag;
        }
    };
    claim(supporters, 1);
    claim(opposers, 2);
    claim(followers, 3);

    std::int64_t w_plus = 0, w_minus = 0, w_follow = game.weight(voter);
    for (int v : supporters) w_plus += game.weight(v);
    for (int v : opposers) w_minus += game.weight(v);
    for (int v : followers) w_follow += game.weight(v);

    const std::int64_t active = w_plus + w_minus + w_follow;
    const int up = game.outcome(w_plus + w_follow, active);
    const int down = game.outcome(w_plus, active);
    return (up - down) / 2;
}

} // namespace liquidpower
