#include "dtl/tree.hpp"

#include <algorithm>

namespace dtl {

std::string to_display(const Word& w, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i && !sep.empty()) out += sep;
        out += w[i].name;
    }
    return out;
}

Address Address::reversed() const {
    Address r;
    r.path.assign(path.rbegin(), path.rend());
    return r;
}

Address Address::concat(const Address& suffix) const {
    Address r = *this;
    r.path.insert(r.path.end(), suffix.path.begin(), suffix.path.end());
    return r;
}

Address Address::parent() const {
    Address r = *this;
    r.path.pop_back();
    return r;
}

bool Address::is_prefix_of(const Address& other) const {
    if (path.size() > other.path.size()) return false;
    return std::equal(path.begin(), path.end(), other.path.begin());
}

bool Address::is_suffix_of(const Address& other) const {
    if (path.size() > other.path.size()) return false;
    return std::equal(path.rbegin(), path.rend(), other.path.rbegin());
}

Address Address::strip_prefix_from(const Address& other) const {
    Address r;
    r.path.assign(other.path.begin() + path.size(), other.path.end());
    return r;
}

Address Address::strip_suffix_from(const Address& other) const {
    Address r;
    r.path.assign(other.path.begin(), other.path.end() - path.size());
    return r;
}

bool Alphabet::has_function(const FunctionSymbol& f) const {
    return std::find(functions.begin(), functions.end(), f) != functions.end();
}

bool Alphabet::has_letter(const Letter& l) const {
    return std::find(vocabulary.begin(), vocabulary.end(), l) != vocabulary.end();
}

bool Alphabet::compatible_with(const Alphabet& other) const {
    auto as_set = [](const auto& v) {
        using T = typename std::decay_t<decltype(v)>::value_type;
        return std::set<T>(v.begin(), v.end());
    };
    return as_set(functions) == as_set(other.functions) &&
           as_set(vocabulary) == as_set(other.vocabulary);
}

AlphabetRef make_alphabet(std::vector<std::string> functions, std::vector<std::string> letters) {
    auto a = std::make_shared<Alphabet>();
    for (auto& f : functions) a->functions.push_back(FunctionSymbol{std::move(f)});
    for (auto& l : letters) a->vocabulary.push_back(Letter{std::move(l)});
    return a;
}

Tree Tree::make(const std::vector<std::pair<Address, Letter>>& pairs, AlphabetRef alphabet) {
    Tree t(std::move(alphabet));
    for (const auto& [addr, letter] : pairs) {
        for (const auto& f : addr.path) {
            if (!t.alphabet_->has_function(f))
                throw UnknownSymbol("function '" + f.name + "' is not declared");
        }
        if (!t.alphabet_->has_letter(letter))
            throw UnknownLetter("letter '" + letter.name + "' is not declared");
        auto [it, inserted] = t.entries_.emplace(addr, letter);
        (void)it;
        if (!inserted) throw DuplicateAddress("address occurs twice in the entry list");
    }
    return t;
}

size_t Tree::depth() const {
    size_t d = 0;
    for (const auto& [addr, letter] : entries_) d = std::max(d, addr.length());
    return d;
}

std::optional<Letter> Tree::label_at(const Address& a) const {
    auto it = entries_.find(a);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

Tree Tree::top(size_t p) const {
    Tree r(alphabet_);
    for (const auto& [addr, letter] : entries_)
        if (addr.length() <= p) r.entries_.emplace(addr, letter);
    return r;
}

Tree Tree::reversed() const {
    Tree r(alphabet_);
    for (const auto& [addr, letter] : entries_) r.entries_.emplace(addr.reversed(), letter);
    return r;
}

Tree Tree::subtree(const Address& prefix) const {
    Tree r(alphabet_);
    for (const auto& [addr, letter] : entries_)
        if (prefix.is_prefix_of(addr)) r.entries_.emplace(prefix.strip_prefix_from(addr), letter);
    return r;
}

Tree Tree::anti_subtree(const Address& suffix) const {
    Tree r(alphabet_);
    for (const auto& [addr, letter] : entries_)
        if (suffix.is_suffix_of(addr)) r.entries_.emplace(suffix.strip_suffix_from(addr), letter);
    return r;
}

std::vector<Address> Tree::vertices() const {
    std::set<Address> seen;
    for (const auto& [addr, letter] : entries_) {
        Address prefix;
        seen.insert(prefix);
        for (const auto& f : addr.path) {
            prefix.path.push_back(f);
            seen.insert(prefix);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Address> Tree::anti_vertices() const {
    std::set<Address> seen;
    for (const auto& [addr, letter] : entries_) {
        for (size_t start = 0; start <= addr.path.size(); ++start) {
            Address suffix;
            suffix.path.assign(addr.path.begin() + start, addr.path.end());
            seen.insert(suffix);
        }
    }
    return {seen.begin(), seen.end()};
}

std::map<Letter, size_t> Tree::letter_counts() const {
    std::map<Letter, size_t> counts;
    for (const auto& [addr, letter] : entries_) ++counts[letter];
    return counts;
}

bool operator<(const Tree& a, const Tree& b) {
    return std::lexicographical_compare(
        a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
        [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

}  // namespace dtl
