#include "minabc/graph6.hpp"

namespace minabc {

namespace {
constexpr int kBias = 63;
constexpr int kMax = 126;
}  // namespace

std::string encode_graph6(const Tree& t) {
    int n = t.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kBias + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kMax));
        out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kBias + (n & 63)));
    } else {
        throw OrderTooLarge("graph6 long-long form not supported");
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        const auto& nb = t.neighbors(v);
        size_t idx = 0;
        for (int u = 0; u < v; ++u) {
            int bit = (idx < nb.size() && nb[idx] == u) ? 1 : 0;
            if (bit) ++idx;
            acc = (acc << 1) | bit;
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>(kBias + (acc << (6 - nbits))));
    return out;
}

Tree decode_graph6(const std::string& s) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (s.size() < pos + k) throw MalformedGraph6("truncated input");
    };
    auto byte = [&](size_t i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < kBias || c > kMax) throw MalformedGraph6("byte out of range");
        return static_cast<int>(c) - kBias;
    };
    need(1);
    long long n;
    if (s[0] == '~') {
        need(4);
        if (s.size() >= 2 && s[1] == '~') throw MalformedGraph6("long-long form not supported");
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    if (n < 1) throw MalformedGraph6("empty graph");
    long long bits = n * (n - 1) / 2;
    long long bytes = (bits + 5) / 6;
    need(static_cast<size_t>(bytes));
    if (s.size() != pos + static_cast<size_t>(bytes))
        throw MalformedGraph6("trailing bytes");

    std::vector<Edge> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int b = byte(pos + static_cast<size_t>(bit / 6));
            if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // padding bits must be zero
    for (long long pad = bit; pad < bytes * 6; ++pad) {
        int b = byte(pos + static_cast<size_t>(pad / 6));
        if ((b >> (5 - pad % 6)) & 1) throw MalformedGraph6("nonzero padding");
    }
    try {
        return Tree::validate(static_cast<int>(n), edges);
    } catch (const NotATree&) {
        throw;
    } catch (const Error& e) {
        throw NotATree(e.what());
    }
}

}  // namespace minabc
