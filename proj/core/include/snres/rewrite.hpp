#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "snres/perm.hpp"

namespace snres {

struct Letter {
    int index = 1;       // generator s_index
    bool inverse = false;
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

enum class Rule { R0, R1, R2, R3 };

struct Ramp {
    int j = 1;  // start
    int k = 1;  // peak, j <= k
    friend bool operator==(const Ramp&, const Ramp&) = default;
};

struct NormalForm {
    std::vector<Ramp> ramps;
    Word word() const;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

enum class Strategy { Leftmost, Rightmost, Random };

struct Redex {
    std::size_t pos = 0;
    Rule rule = Rule::R0;
    std::size_t length = 1;
};

Word parse_word(const std::string& text);
std::string format_word(const Word& w);
std::string rule_name(Rule r);

Word positive_word(const std::vector<int>& indices);
Word ramp_word(int j, int k);

Perm word_to_perm(const Word& w, int n);

std::vector<Redex> find_redexes(const Word& w);
Word apply_redex(const Word& w, const Redex& r);
std::optional<std::pair<Word, Rule>> reduce_step(const Word& w, Strategy s = Strategy::Leftmost,
                                                 std::mt19937_64* rng = nullptr);

Word reduce(const Word& w, Strategy s = Strategy::Leftmost, std::mt19937_64* rng = nullptr);
NormalForm normal_form_word(const Word& w);
NormalForm normal_form_perm(const Perm& p);
Word nf_word(const Perm& p);

bool is_irreducible(const Word& w);
std::optional<NormalForm> parse_ramps(const Word& w);
bool is_irreducible_by_ramps(const Word& w);

std::vector<int> complexity_vector(const Word& w, int n);

std::vector<NormalForm> enumerate_normal_forms(int n);

}  // namespace snres
