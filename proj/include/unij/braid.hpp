#pragma once

#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "unij/laurent.hpp"

namespace unij {

/// Braid word on n strands; letter +i is the generator sigma_i, -i its
/// inverse (1 <= i <= n-1). Empty words are allowed.
struct BraidWord {
    int strands = 1;
    std::vector<int> word;

    int writhe() const {
        int w = 0;
        for (int g : word) w += (g > 0) ? 1 : -1;
        return w;
    }

    /// Permutation of strand positions induced by the word: perm[k] is the
    /// final position of the strand starting at position k (0-based).
    std::vector<int> permutation() const {
        std::vector<int> p(strands);
        std::iota(p.begin(), p.end(), 0);
        // track positions: applying sigma_k swaps positions k, k+1
        std::vector<int> pos(strands);
        std::iota(pos.begin(), pos.end(), 0);
        for (int g : word) {
            int k = std::abs(g) - 1;
            std::swap(pos[k], pos[k + 1]);
        }
        // pos[k] = strand that ends at position k; invert
        std::vector<int> perm(strands);
        for (int k = 0; k < strands; ++k) perm[pos[k]] = k;
        return perm;
    }
};

/// Closure data: components, colouring, linking matrix, writhes, framings.
struct LinkData {
    int components = 0;
    std::vector<int> strand_component;        // per strand position (0-based component ids)
    std::vector<int> colouring;               // C on {1..2n}: closure symmetry C(k)=C(2n+1-k)
    std::vector<std::vector<int>> linking;    // lk_{i,j}, symmetric, zero diagonal
    std::vector<int> self_writhe;             // per component
    std::vector<int> framing;                 // per component, defaults to self-writhe
};

inline BraidWord parse_braid(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos >= text.size() || (text[pos] != 'B' && text[pos] != 'b'))
        input_error("braid must start with strand declaration 'Bn:'");
    ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) input_error("missing strand count after 'B'");
    int n = std::stoi(text.substr(start, pos - start));
    if (n < 1) input_error("strand count must be >= 1");
    skip_ws();
    if (pos >= text.size() || text[pos] != ':') input_error("expected ':' after strand count");
    ++pos;

    BraidWord b;
    b.strands = n;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        char c = text[pos];
        int g = 0;
        if (c == 's' || c == 'S') {
            // compact form: s3 or s3' (prime = inverse)
            ++pos;
            start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) input_error("malformed generator token");
            g = std::stoi(text.substr(start, pos - start));
            if (pos < text.size() && text[pos] == '\'') { g = -g; ++pos; }
        } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            int sign = 1;
            if (c == '-') { sign = -1; ++pos; }
            else if (c == '+') ++pos;
            start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) input_error("malformed braid letter");
            g = sign * std::stoi(text.substr(start, pos - start));
        } else {
            input_error(std::string("unexpected character in braid word: '") + c + "'");
        }
        if (g == 0 || std::abs(g) > n - 1)
            input_error("generator index out of range for B" + std::to_string(n) +
                        ": " + std::to_string(g));
        b.word.push_back(g);
    }
    return b;
}

/// Closure combinatorics. Components are the cycles of the word's
/// permutation; lk_{i,j} is half the signed inter-component crossing count;
/// w_i the signed self-crossing count. Default framing f_i = w_i.
inline LinkData close(const BraidWord& b) {
    LinkData L;
    auto perm = b.permutation();
    std::vector<int> comp(b.strands, -1);
    int ncomp = 0;
    for (int s = 0; s < b.strands; ++s) {
        if (comp[s] >= 0) continue;
        int c = ncomp++;
        for (int t = s; comp[t] < 0; t = perm[t]) comp[t] = c;
    }
    L.components = ncomp;
    L.strand_component = comp;

    // colouring on 2n points: bottom k and its closure partner share a component
    L.colouring.resize(2 * b.strands);
    for (int k = 0; k < b.strands; ++k) {
        L.colouring[k] = comp[k];
        L.colouring[2 * b.strands - 1 - k] = comp[k];
    }

    // signed crossing counts per component pair, tracking strand positions
    std::vector<std::vector<int>> signed_count(ncomp, std::vector<int>(ncomp, 0));
    std::vector<int> at(b.strands);  // at[pos] = strand id currently at pos
    std::iota(at.begin(), at.end(), 0);
    for (int g : b.word) {
        int k = std::abs(g) - 1, s = (g > 0) ? 1 : -1;
        int ca = comp[at[k]], cb = comp[at[k + 1]];
        signed_count[ca][cb] += s;
        if (ca != cb) signed_count[cb][ca] += s;
        std::swap(at[k], at[k + 1]);
    }
    L.linking.assign(ncomp, std::vector<int>(ncomp, 0));
    L.self_writhe.assign(ncomp, 0);
    for (int i = 0; i < ncomp; ++i) {
        L.self_writhe[i] = signed_count[i][i];
        for (int j = 0; j < ncomp; ++j) {
            if (i == j) continue;
            if (signed_count[i][j] % 2 != 0) internal_error("odd inter-component crossing count");
            L.linking[i][j] = signed_count[i][j] / 2;
        }
    }
    L.framing = L.self_writhe;
    return L;
}

/// Conjugate by sigma_g: word -> g^{-1} . word . g (closure unchanged).
inline BraidWord conjugate(const BraidWord& b, int g) {
    if (g == 0 || std::abs(g) > b.strands - 1) input_error("conjugating generator out of range");
    BraidWord r = b;
    r.word.insert(r.word.begin(), -g);
    r.word.push_back(g);
    return r;
}

/// Markov stabilization: add a strand and append sigma_n^{+-1}.
inline BraidWord stabilize(const BraidWord& b, int sign) {
    BraidWord r = b;
    r.strands = b.strands + 1;
    r.word.push_back(sign >= 0 ? b.strands : -b.strands);
    return r;
}

inline std::string braid_str(const BraidWord& b) {
    std::ostringstream os;
    os << "B" << b.strands << ":";
    for (int g : b.word) os << " " << g;
    return os.str();
}

}  // namespace unij
