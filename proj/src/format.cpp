#include "dtl/format.hpp"

#include <algorithm>
#include <sstream>

namespace dtl {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool is_comment(const std::string& line) {
    std::string t = trim(line);
    return !t.empty() && t[0] == '#';
}

// Entry lines read "<address> : <letter>"; the letter may be any token, so
// the split happens at the first " : ".
std::pair<Address, Letter> entry_from_line(const std::string& line) {
    size_t sep = line.find(" : ");
    if (sep == std::string::npos) throw ParseError("malformed tree entry: " + line);
    Address a = address_from_string(trim(line.substr(0, sep)));
    std::string letter = trim(line.substr(sep + 3));
    if (letter.empty()) throw ParseError("missing letter in tree entry: " + line);
    return {a, Letter{letter}};
}

}  // namespace

std::string address_to_string(const Address& a) {
    if (a.empty()) return "/";
    std::string out;
    for (const auto& f : a.path) out += "/" + f.name;
    return out;
}

Address address_from_string(const std::string& s) {
    if (s.empty() || s[0] != '/') throw ParseError("address must start with '/': " + s);
    Address a;
    if (s == "/") return a;
    size_t pos = 1;
    while (pos <= s.size()) {
        size_t next = s.find('/', pos);
        std::string part = next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos);
        if (part.empty()) throw ParseError("empty path component in address: " + s);
        a.path.push_back(FunctionSymbol{part});
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return a;
}

std::string tree_to_text(const Tree& t) {
    std::ostringstream out;
    if (t.alphabet()) {
        out << "functions:";
        for (const auto& f : t.alphabet()->functions) out << " " << f.name;
        out << "\n";
        out << "vocabulary:";
        for (const auto& l : t.alphabet()->vocabulary) out << " " << l.name;
        out << "\n";
    }
    for (const auto& [addr, letter] : t.entries())
        out << address_to_string(addr) << " : " << letter.name << "\n";
    return out.str();
}

Tree tree_from_text(const std::string& text) {
    std::vector<std::string> functions, vocabulary;
    std::vector<std::pair<Address, Letter>> pairs;
    for (const std::string& raw : lines_of(text)) {
        std::string line = trim(raw);
        if (line.empty() || is_comment(line)) continue;
        if (line.rfind("functions:", 0) == 0) {
            functions = split_ws(line.substr(10));
            continue;
        }
        if (line.rfind("vocabulary:", 0) == 0) {
            vocabulary = split_ws(line.substr(11));
            continue;
        }
        pairs.push_back(entry_from_line(line));
    }
    if (functions.empty() && vocabulary.empty()) {
        // headerless file: infer the alphabet from the entries
        std::set<std::string> fs, ls;
        for (const auto& [a, l] : pairs) {
            for (const auto& f : a.path) fs.insert(f.name);
            ls.insert(l.name);
        }
        functions.assign(fs.begin(), fs.end());
        vocabulary.assign(ls.begin(), ls.end());
    }
    return Tree::make(pairs, make_alphabet(functions, vocabulary));
}

std::string spec_to_text(const LocalSpec& spec) {
    std::ostringstream out;
    out << "p: " << spec.p << "\n";
    out << "mode: " << (spec.mode == Mode::Local ? "local" : "anti-local") << "\n";
    out << "functions:";
    for (const auto& f : spec.alphabet->functions) out << " " << f.name;
    out << "\nvocabulary:";
    for (const auto& l : spec.alphabet->vocabulary) out << " " << l.name;
    out << "\n";
    auto section = [&](const char* name, const std::vector<Tree>& trees) {
        out << name << ":\n";
        bool first = true;
        for (const Tree& t : trees) {
            if (!first) out << "\n";
            first = false;
            if (t.empty()) {
                out << "empty\n";
                continue;
            }
            for (const auto& [addr, letter] : t.entries())
                out << address_to_string(addr) << " : " << letter.name << "\n";
        }
    };
    section("U1", spec.u1);
    section("U2", spec.u2);
    section("U3", spec.u3);
    return out.str();
}

LocalSpec spec_from_text(const std::string& text, std::string* warning) {
    int p = -1;
    Mode mode = Mode::Local;
    bool mode_seen = false;
    std::vector<std::string> functions, vocabulary;
    std::vector<Tree> sets[3];
    int section = -1;
    AlphabetRef alphabet;

    std::vector<std::pair<Address, Letter>> block;
    bool block_open = false;
    auto flush = [&]() {
        if (!block_open) return;
        if (section < 0) throw ParseError("tree block outside of a U section");
        if (!alphabet) alphabet = make_alphabet(functions, vocabulary);
        sets[section].push_back(Tree::make(block, alphabet));
        block.clear();
        block_open = false;
    };

    for (const std::string& raw : lines_of(text)) {
        std::string line = trim(raw);
        if (is_comment(line)) continue;
        if (line.empty()) {
            flush();
            continue;
        }
        if (line.rfind("p:", 0) == 0) {
            p = std::stoi(trim(line.substr(2)));
            continue;
        }
        if (line.rfind("mode:", 0) == 0) {
            std::string m = trim(line.substr(5));
            if (m == "local")
                mode = Mode::Local;
            else if (m == "anti-local")
                mode = Mode::AntiLocal;
            else
                throw ParseError("unknown mode: " + m);
            mode_seen = true;
            continue;
        }
        if (line.rfind("functions:", 0) == 0) {
            functions = split_ws(line.substr(10));
            continue;
        }
        if (line.rfind("vocabulary:", 0) == 0) {
            vocabulary = split_ws(line.substr(11));
            continue;
        }
        if (line == "U1:" || line == "U2:" || line == "U3:") {
            flush();
            section = line[1] - '1';
            continue;
        }
        if (line == "empty") {
            flush();
            if (section < 0) throw ParseError("tree block outside of a U section");
            if (!alphabet) alphabet = make_alphabet(functions, vocabulary);
            sets[section].push_back(Tree(alphabet));
            continue;
        }
        block.push_back(entry_from_line(line));
        block_open = true;
    }
    flush();
    if (p <= 0) throw ParseError("spec file needs a positive 'p:' header");
    if (!mode_seen) throw ParseError("spec file needs a 'mode:' header");
    if (!alphabet) alphabet = make_alphabet(functions, vocabulary);
    return make_local_spec(p, mode, sets[0], sets[1], sets[2], alphabet, warning);
}

std::string linearisation_to_text(const Linearisation& lin) {
    std::string out;
    bool first = true;
    for (const auto& slot : lin.slots()) {
        if (!first) out += ", ";
        first = false;
        switch (slot.kind) {
            case Slot::Kind::Root: out += "root"; break;
            case Slot::Kind::Sub: out += "sub(" + slot.fn.name + ")"; break;
            case Slot::Kind::AntiSub: out += "anti(" + slot.fn.name + ")"; break;
        }
    }
    return out + "\n";
}

Linearisation linearisation_from_text(const std::string& text) {
    std::string line;
    for (const std::string& raw : lines_of(text)) {
        std::string t = trim(raw);
        if (!t.empty() && !is_comment(t)) {
            line = t;
            break;
        }
    }
    if (line.empty()) throw ParseError("empty linearisation file");
    std::vector<Slot> slots;
    std::vector<std::string> functions;
    size_t pos = 0;
    while (pos < line.size()) {
        size_t comma = line.find(',', pos);
        std::string tok = trim(comma == std::string::npos ? line.substr(pos)
                                                          : line.substr(pos, comma - pos));
        if (tok == "root") {
            slots.push_back(Slot{Slot::Kind::Root, {}});
        } else if (tok.rfind("sub(", 0) == 0 && tok.back() == ')') {
            std::string fn = trim(tok.substr(4, tok.size() - 5));
            slots.push_back(Slot{Slot::Kind::Sub, FunctionSymbol{fn}});
            functions.push_back(fn);
        } else if (tok.rfind("anti(", 0) == 0 && tok.back() == ')') {
            std::string fn = trim(tok.substr(5, tok.size() - 6));
            slots.push_back(Slot{Slot::Kind::AntiSub, FunctionSymbol{fn}});
            functions.push_back(fn);
        } else {
            throw ParseError("unknown slot: " + tok);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Linearisation::make(std::move(slots), make_alphabet(functions, {}));
}

std::string grammar_to_text(const Grammar& g) {
    std::ostringstream out;
    out << "terminals:";
    for (const auto& t : g.terminals) out << " " << t.name;
    out << "\nvariables:";
    for (const auto& v : g.variables) out << " " << v;
    out << "\nstart: " << g.start << "\n";
    // group rule bodies per head, in first-appearance order
    std::vector<std::string> heads;
    std::map<std::string, std::vector<const Rule*>> by_head;
    for (const auto& r : g.rules) {
        if (!by_head.count(r.head)) heads.push_back(r.head);
        by_head[r.head].push_back(&r);
    }
    for (const auto& h : heads) {
        out << h << " ->";
        bool first = true;
        for (const Rule* r : by_head[h]) {
            if (!first) out << " |";
            first = false;
            if (r->body.empty()) out << " epsilon";
            for (const auto& s : r->body) out << " " << s.name;
        }
        out << "\n";
    }
    return out.str();
}

Grammar grammar_from_text(const std::string& text) {
    Grammar g;
    std::set<std::string> vars, terms;
    for (const std::string& raw : lines_of(text)) {
        std::string line = trim(raw);
        if (line.empty() || is_comment(line)) continue;
        if (line.rfind("terminals:", 0) == 0) {
            for (const auto& t : split_ws(line.substr(10))) {
                g.terminals.push_back(Letter{t});
                terms.insert(t);
            }
            continue;
        }
        if (line.rfind("variables:", 0) == 0) {
            for (const auto& v : split_ws(line.substr(10))) {
                g.variables.push_back(v);
                vars.insert(v);
            }
            continue;
        }
        if (line.rfind("start:", 0) == 0) {
            g.start = trim(line.substr(6));
            continue;
        }
        size_t arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError("malformed grammar line: " + line);
        std::string head = trim(line.substr(0, arrow));
        std::string rest = line.substr(arrow + 2);
        // split alternatives on '|'
        std::vector<std::string> alts;
        size_t pos = 0;
        while (true) {
            size_t bar = rest.find('|', pos);
            alts.push_back(bar == std::string::npos ? rest.substr(pos)
                                                    : rest.substr(pos, bar - pos));
            if (bar == std::string::npos) break;
            pos = bar + 1;
        }
        for (const auto& alt : alts) {
            Rule r;
            r.head = head;
            for (const auto& tok : split_ws(alt)) {
                if (tok == "epsilon") continue;
                bool is_term = terms.count(tok) > 0;
                bool is_var = vars.count(tok) > 0;
                if (is_term && is_var)
                    throw ParseError("symbol declared both terminal and variable: " + tok);
                if (!is_term && !is_var) throw ParseError("undeclared symbol: " + tok);
                r.body.push_back(GSym{is_term, tok});
            }
            g.rules.push_back(std::move(r));
        }
    }
    validate_grammar(g);
    return g;
}

Word word_from_string(const std::string& s) {
    std::string t = trim(s);
    Word w;
    if (t.find(' ') != std::string::npos) {
        for (const auto& tok : split_ws(t)) w.push_back(Letter{tok});
    } else {
        for (char c : t) w.push_back(Letter{std::string(1, c)});
    }
    return w;
}

}  // namespace dtl
