#pragma once

/**
 * @file shake.hpp
 * @brief SHAKE256 extendable-output function (FIPS 202).
 *
 * Self-contained Keccak-f[1600] sponge with rate 136 bytes and the
 * SHAKE domain suffix 0x1F. Used for challenge hashing and for
 * deterministic seed expansion; pinned against reference vectors in
 * the test suite.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace spdh {

namespace detail {

inline constexpr std::array<std::uint64_t, 24> kKeccakRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

inline constexpr std::uint64_t rotl64(std::uint64_t x, int s) {
    return (x << s) | (x >> (64 - s));
}

inline void keccak_f1600(std::array<std::uint64_t, 25>& st) {
    for (int round = 0; round < 24; ++round) {
        // theta
        std::uint64_t c[5];
        for (int x = 0; x < 5; ++x)
            c[x] = st[x] ^ st[x + 5] ^ st[x + 10] ^ st[x + 15] ^ st[x + 20];
        for (int x = 0; x < 5; ++x) {
            std::uint64_t d = c[(x + 4) % 5] ^ rotl64(c[(x + 1) % 5], 1);
            for (int y = 0; y < 25; y += 5)
                st[y + x] ^= d;
        }
        // rho + pi
        std::uint64_t cur = st[1];
        static constexpr int kPi[24] = {10, 7,  11, 17, 18, 3,  5,  16,
                                        8,  21, 24, 4,  15, 23, 19, 13,
                                        12, 2,  20, 14, 22, 9,  6,  1};
        static constexpr int kRho[24] = {1,  3,  6,  10, 15, 21, 28, 36,
                                         45, 55, 2,  14, 27, 41, 56, 8,
                                         25, 43, 62, 18, 39, 61, 20, 44};
        for (int i = 0; i < 24; ++i) {
            int j = kPi[i];
            std::uint64_t tmp = st[j];
            st[j] = rotl64(cur, kRho[i]);
            cur = tmp;
        }
        // chi
        for (int y = 0; y < 25; y += 5) {
            std::uint64_t row[5];
            for (int x = 0; x < 5; ++x)
                row[x] = st[y + x];
            for (int x = 0; x < 5; ++x)
                st[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
        }
        // iota
        st[0] ^= kKeccakRoundConstants[round];
    }
}

} // namespace detail

/// Incremental SHAKE256: absorb any number of byte spans, then squeeze
/// an arbitrary-length output stream.
class Shake256 {
public:
    static constexpr std::size_t kRate = 136;

    void absorb(std::span<const std::uint8_t> data) {
        if (squeezing_)
            throw std::logic_error("Shake256: absorb after squeeze");
        for (std::uint8_t byte : data) {
            lane_bytes_[offset_++] ^= byte;
            if (offset_ == kRate) {
                permute();
                offset_ = 0;
            }
        }
    }

    void absorb(std::string_view text) {
        absorb(std::span<const std::uint8_t>(
            reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    }

    void squeeze(std::span<std::uint8_t> out) {
        if (!squeezing_) {
            lane_bytes_[offset_] ^= 0x1f;
            lane_bytes_[kRate - 1] ^= 0x80;
            permute();
            offset_ = 0;
            squeezing_ = true;
        }
        for (std::uint8_t& byte : out) {
            if (offset_ == kRate) {
                permute();
                offset_ = 0;
            }
            byte = lane_bytes_[offset_++];
        }
    }

    std::vector<std::uint8_t> squeeze(std::size_t count) {
        std::vector<std::uint8_t> out(count);
        squeeze(std::span<std::uint8_t>(out));
        return out;
    }

private:
    void permute() {
        std::array<std::uint64_t, 25> lanes{};
        for (int i = 0; i < 25; ++i) {
            std::uint64_t lane = 0;
            for (int b = 7; b >= 0; --b)
                lane = (lane << 8) | lane_bytes_[i * 8 + b];
            lanes[i] = lane;
        }
        detail::keccak_f1600(lanes);
        for (int i = 0; i < 25; ++i) {
            std::uint64_t lane = lanes[i];
            for (int b = 0; b < 8; ++b) {
                lane_bytes_[i * 8 + b] = static_cast<std::uint8_t>(lane & 0xff);
                lane >>= 8;
            }
        }
    }

    std::array<std::uint8_t, 200> lane_bytes_{};
    std::size_t offset_ = 0;
    bool squeezing_ = false;
};

/// One-shot convenience wrapper.
inline std::vector<std::uint8_t> shake256(std::span<const std::uint8_t> data,
                                          std::size_t out_len) {
    Shake256 xof;
    xof.absorb(data);
    return xof.squeeze(out_len);
}

} // namespace spdh
