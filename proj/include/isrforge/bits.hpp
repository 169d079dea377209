// Fixed-width bit vectors over vertex ids 0..n-1.
#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace isrforge {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int universe() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[static_cast<size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // true iff (*this & o) ⊆ {only}; used for single-token independence checks
    bool intersection_within(const Bitset& o, int only) const {
        assert(nbits_ == o.nbits_);
        const size_t ow = static_cast<size_t>(only) >> 6;
        const std::uint64_t obit = std::uint64_t{1} << (only & 63);
        for (size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i] & o.words_[i];
            if (i == ow) w &= ~obit;
            if (w) return false;
        }
        return true;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    // first set bit >= from, or -1
    int next_bit(int from) const {
        if (from >= nbits_) return -1;
        size_t wi = static_cast<size_t>(from) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>((wi << 6) + std::countr_zero(w));
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }
    int lowest_bit() const { return next_bit(0); }

    template <class F>
    void for_each_bit(F&& f) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>((wi << 6) + b));
                w &= w - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    // Order of ascending vertex lists: the set owning the lowest differing
    // bit compares smaller. Total over a fixed universe.
    static int compare_sets(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        for (size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t d = a.words_[i] ^ b.words_[i];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return (a.words_[i] & low) ? -1 : 1;
            }
        }
        return 0;
    }

    // Little-endian word dump, trailing zero words trimmed.
    std::string key_bytes() const {
        size_t nw = words_.size();
        while (nw > 0 && words_[nw - 1] == 0) --nw;
        std::string out;
        out.reserve(nw * 8);
        for (size_t i = 0; i < nw; ++i) {
            std::uint64_t w = words_[i];
            for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
        }
        return out;
    }

    static Bitset from_key_bytes(int nbits, const std::string& key) {
        Bitset s(nbits);
        for (size_t i = 0; i < key.size(); ++i) {
            auto byte = static_cast<std::uint64_t>(static_cast<unsigned char>(key[i]));
            s.words_[i >> 3] |= byte << (8 * (i & 7));
        }
        return s;
    }

    size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace isrforge
