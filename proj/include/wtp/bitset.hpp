#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace wtp {

// Packed membership vector over a fixed-size ground set.  Single spaces are
// capped at 64 atoms (one word); product grounds at 4096 atoms (word array).
class AtomSet {
public:
    AtomSet() = default;
    explicit AtomSet(std::size_t nbits)
        : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static AtomSet full(std::size_t nbits) {
        AtomSet s(nbits);
        for (auto& w : s.w_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t size() const { return nbits_; }
    std::size_t words() const { return w_.size(); }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : w_) if (w) return false;
        return true;
    }

    bool is_subset_of(const AtomSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const AtomSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    AtomSet& operator&=(const AtomSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    AtomSet& operator|=(const AtomSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    AtomSet& operator-=(const AtomSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
    friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
    friend AtomSet operator-(AtomSet a, const AtomSet& b) { return a -= b; }

    AtomSet complement() const {
        AtomSet r(nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool operator==(const AtomSet& o) const = default;

    // Deterministic family order: popcount first, then word-wise value.
    static bool canonical_less(const AtomSet& a, const AtomSet& b) {
        std::size_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

    // Visit set bits in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(wi * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
        for (auto w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    void trim() {
        if (nbits_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

struct AtomSetHash {
    std::size_t operator()(const AtomSet& s) const { return s.hash(); }
};

} // namespace wtp
