#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace bmg {

/// Subset of a player index space of at most 64 players, canonically
/// identified by its bitmask.
struct Coalition {
    std::uint64_t bits = 0;
    int player_count = 0;

    static Coalition empty(int n) { return {0, n}; }
    static Coalition grand(int n) {
        check_space(n);
        return {n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, n};
    }
    static Coalition of(std::initializer_list<int> members, int n) {
        Coalition c = empty(n);
        for (int i : members)
            c = c.with(i);
        return c;
    }
    static Coalition singleton(int i, int n) { return of({i}, n); }

    bool contains(int i) const { return (bits >> i) & 1; }
    Coalition with(int i) const {
        if (i < 0 || i >= player_count)
            throw std::out_of_range("player index out of range");
        return {bits | (std::uint64_t{1} << i), player_count};
    }
    int size() const { return std::popcount(bits); }
    bool is_empty() const { return bits == 0; }
    bool is_grand() const { return *this == grand(player_count); }
    bool subset_of(const Coalition& o) const { return (bits & ~o.bits) == 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < player_count; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Coalition& a, const Coalition& b) {
        return a.bits == b.bits && a.player_count == b.player_count;
    }
    /// Canonical order: by bitmask value.
    friend bool operator<(const Coalition& a, const Coalition& b) { return a.bits < b.bits; }

private:
    static void check_space(int n) {
        if (n < 0 || n > 64)
            throw std::out_of_range("player space must have between 0 and 64 players");
    }
};

}  // namespace bmg
