#include "chio/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "chio/errors.hpp"

namespace chio {

namespace {

struct Token {
    std::string text;
    int col;  // 1-based
};

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Splits a line into words plus the punctuation tokens ( ) =.
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::string cur;
    int start = 0;
    auto flush = [&](int end_col) {
        if (!cur.empty()) {
            out.push_back({cur, start + 1});
            cur.clear();
        }
        (void)end_col;
    };
    for (int i = 0; i < static_cast<int>(line.size()); ++i) {
        const char c = line[static_cast<size_t>(i)];
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush(i);
        } else if (c == '(' || c == ')' || c == '=' || c == ',') {
            flush(i);
            if (c != ',') {  // commas are plain separators inside PWL lists
                out.push_back({std::string(1, c), i + 1});
            }
        } else {
            if (cur.empty()) {
                start = i;
            }
            cur.push_back(c);
        }
    }
    flush(static_cast<int>(line.size()));
    return out;
}

double si_value_or_throw(const std::string& token, int line, int col) {
    try {
        return parse_si_value(token);
    } catch (const ParseError& e) {
        throw ParseError(std::string("bad value '") + token + "': " + e.what(), line, col);
    }
}

// Cursor over one line's tokens with position-aware errors.
struct LineReader {
    const std::vector<Token>& toks;
    int line;
    size_t pos = 0;

    bool done() const { return pos >= toks.size(); }
    const Token& peek() const {
        if (done()) {
            throw ParseError("unexpected end of line", line, 0);
        }
        return toks[pos];
    }
    Token take() {
        const Token& t = peek();
        ++pos;
        return t;
    }
    Token expect(const std::string& text) {
        const Token t = take();
        if (t.text != text) {
            throw ParseError("expected '" + text + "', got '" + t.text + "'", line, t.col);
        }
        return t;
    }
    double value() {
        const Token t = take();
        return si_value_or_throw(t.text, line, t.col);
    }
    void end() {
        if (!done()) {
            throw ParseError("unexpected trailing token '" + peek().text + "'", line, peek().col);
        }
    }
};

// key=value pairs until the closing paren.
std::map<std::string, double> read_param_group(LineReader& r) {
    std::map<std::string, double> params;
    r.expect("(");
    while (r.peek().text != ")") {
        const Token key = r.take();
        r.expect("=");
        const Token val = r.take();
        params[key.text] = si_value_or_throw(val.text, r.line, val.col);
    }
    r.expect(")");
    return params;
}

// Optional trailing key=value on an element line.
std::optional<double> read_optional_kv(LineReader& r, const std::string& key) {
    if (r.done()) {
        return std::nullopt;
    }
    const Token k = r.take();
    if (k.text != key) {
        throw ParseError("unexpected parameter '" + k.text + "' (expected '" + key + "')", r.line,
                         k.col);
    }
    r.expect("=");
    const Token v = r.take();
    return si_value_or_throw(v.text, r.line, v.col);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

double parse_si_value(const std::string& token) {
    if (token.empty()) {
        throw ParseError("empty value", 0, 0);
    }
    const std::string t = lowercase(token);
    size_t consumed = 0;
    double base = 0.0;
    try {
        base = std::stod(t, &consumed);
    } catch (const std::exception&) {
        throw ParseError("not a number", 0, 0);
    }
    const std::string suffix = t.substr(consumed);
    if (suffix.empty()) {
        return base;
    }
    if (suffix == "f") return base * 1e-15;
    if (suffix == "p") return base * 1e-12;
    if (suffix == "n") return base * 1e-9;
    if (suffix == "u") return base * 1e-6;
    if (suffix == "m") return base * 1e-3;
    if (suffix == "k") return base * 1e3;
    if (suffix == "meg") return base * 1e6;
    throw ParseError("unknown SI suffix '" + suffix + "'", 0, 0);
}

ParsedDeck parse_netlist(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    {
        std::istringstream in(lowercase(text));
        std::string line;
        while (std::getline(in, line)) {
            lines.push_back(tokenize(line));
        }
    }

    // Models first so references resolve regardless of line order.
    std::map<std::string, DiodeModel> models;
    for (size_t li = 0; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        if (toks.empty() || toks[0].text != ".model") {
            continue;
        }
        LineReader r{toks, static_cast<int>(li + 1)};
        r.take();  // .model
        const Token name = r.take();
        const Token type = r.take();
        if (type.text != "d") {
            throw ParseError("unsupported model type '" + type.text + "' (only D)", r.line, type.col);
        }
        DiodeModel m;
        m.name = name.text;
        for (const auto& [key, val] : read_param_group(r)) {
            if (key == "js") {
                m.js = val;
            } else if (key == "n") {
                m.ideality = val;
            } else if (key == "rs") {
                m.rs = val;
            } else if (key == "vt") {
                m.vt = val;
            } else {
                throw ParseError("unknown diode model parameter '" + key + "'", r.line, 0);
            }
        }
        r.end();
        models[m.name] = m;
    }

    ParsedDeck deck;
    Circuit& c = deck.circuit;

    for (size_t li = 0; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        if (toks.empty()) {
            continue;
        }
        const int line = static_cast<int>(li + 1);
        const Token& head = toks[0];
        if (head.text[0] == '*') {
            continue;  // comment line
        }
        LineReader r{toks, line};
        if (head.text == ".model") {
            continue;  // handled in the first pass
        }
        if (head.text == ".ic") {
            r.take();
            r.expect("v");
            r.expect("(");
            const Token node = r.take();
            r.expect(")");
            r.expect("=");
            const double v = r.value();
            r.end();
            c.set_initial_voltage(c.node(node.text), v);
            continue;
        }
        if (head.text == ".tran") {
            r.take();
            TransientConfig cfg;
            cfg.dt = r.value();
            cfg.tstop = r.value();
            if (!r.done()) {
                const Token t = r.take();
                if (t.text != "uic") {
                    throw ParseError("unexpected '.tran' argument '" + t.text + "'", line, t.col);
                }
                cfg.use_ic = true;
            }
            r.end();
            deck.tran = cfg;
            continue;
        }

        const char kind = head.text[0];
        switch (kind) {
            case 'r': {
                const Token name = r.take();
                const int a = c.node(r.take().text);
                const int b = c.node(r.take().text);
                const double v = r.value();
                r.end();
                c.add_resistor(name.text, a, b, v);
                break;
            }
            case 'c': {
                const Token name = r.take();
                const int a = c.node(r.take().text);
                const int b = c.node(r.take().text);
                const double v = r.value();
                const auto ic = read_optional_kv(r, "ic");
                r.end();
                c.add_capacitor(name.text, a, b, v, ic);
                break;
            }
            case 'l': {
                const Token name = r.take();
                const int a = c.node(r.take().text);
                const int b = c.node(r.take().text);
                const double v = r.value();
                const auto ic = read_optional_kv(r, "ic");
                r.end();
                c.add_inductor(name.text, a, b, v, ic.value_or(0.0));
                break;
            }
            case 'v': {
                const Token name = r.take();
                const int a = c.node(r.take().text);
                const int b = c.node(r.take().text);
                const Token next = r.take();
                PiecewiseLinear wave;
                if (next.text == "pwl") {
                    std::vector<double> vals;
                    r.expect("(");
                    while (r.peek().text != ")") {
                        const Token t = r.take();
                        vals.push_back(si_value_or_throw(t.text, line, t.col));
                    }
                    r.expect(")");
                    if (vals.empty() || vals.size() % 2 != 0) {
                        throw ParseError("PWL needs an even, non-empty list of t v pairs", line,
                                         next.col);
                    }
                    for (size_t i = 0; i < vals.size(); i += 2) {
                        wave.times.push_back(vals[i]);
                        wave.values.push_back(vals[i + 1]);
                        if (i > 0 && vals[i] <= vals[i - 2]) {
                            throw ParseError("PWL times must be strictly increasing", line, next.col);
                        }
                    }
                } else {
                    wave = PiecewiseLinear::constant(si_value_or_throw(next.text, line, next.col));
                }
                r.end();
                c.add_voltage_source(name.text, a, b, std::move(wave));
                break;
            }
            case 'd': {
                const Token name = r.take();
                const int a = c.node(r.take().text);
                const int b = c.node(r.take().text);
                const Token model = r.take();
                auto it = models.find(model.text);
                if (it == models.end()) {
                    throw ParseError("unknown diode model '" + model.text + "'", line, model.col);
                }
                const auto area = read_optional_kv(r, "area");
                r.end();
                c.add_diode(name.text, a, b, area.value_or(1.0), it->second);
                break;
            }
            default:
                throw ParseError("unknown element prefix '" + std::string(1, kind) + "'", line,
                                 head.col);
        }
    }

    c.validate();
    return deck;
}

std::string unparse(const ParsedDeck& deck) {
    std::ostringstream out;
    const Circuit& c = deck.circuit;
    std::map<std::string, DiodeModel> models;
    for (const Element& e : c.elements()) {
        if (const auto* d = std::get_if<Diode>(&e)) {
            models[d->model.name] = d->model;
        }
    }
    for (const auto& [name, m] : models) {
        out << ".model " << name << " d(js=" << fmt(m.js) << " n=" << fmt(m.ideality)
            << " rs=" << fmt(m.rs) << " vt=" << fmt(m.vt) << ")\n";
    }
    for (const Element& e : c.elements()) {
        std::visit(
            [&](const auto& el) {
                using T = std::decay_t<decltype(el)>;
                if constexpr (std::is_same_v<T, Resistor>) {
                    out << el.name << ' ' << c.node_name(el.a) << ' ' << c.node_name(el.b) << ' '
                        << fmt(el.ohms) << '\n';
                } else if constexpr (std::is_same_v<T, Capacitor>) {
                    out << el.name << ' ' << c.node_name(el.a) << ' ' << c.node_name(el.b) << ' '
                        << fmt(el.farads);
                    if (el.v0) {
                        out << " ic=" << fmt(*el.v0);
                    }
                    out << '\n';
                } else if constexpr (std::is_same_v<T, Inductor>) {
                    out << el.name << ' ' << c.node_name(el.a) << ' ' << c.node_name(el.b) << ' '
                        << fmt(el.henries);
                    if (el.i0 != 0.0) {
                        out << " ic=" << fmt(el.i0);
                    }
                    out << '\n';
                } else if constexpr (std::is_same_v<T, VoltageSource>) {
                    out << el.name << ' ' << c.node_name(el.a) << ' ' << c.node_name(el.b);
                    if (el.wave.times.size() == 1) {
                        out << ' ' << fmt(el.wave.values[0]) << '\n';
                    } else {
                        out << " pwl(";
                        for (size_t i = 0; i < el.wave.times.size(); ++i) {
                            if (i) out << ' ';
                            out << fmt(el.wave.times[i]) << ' ' << fmt(el.wave.values[i]);
                        }
                        out << ")\n";
                    }
                } else if constexpr (std::is_same_v<T, Diode>) {
                    out << el.name << ' ' << c.node_name(el.anode) << ' ' << c.node_name(el.cathode)
                        << ' ' << el.model.name << " area=" << fmt(el.area) << '\n';
                }
            },
            e);
    }
    for (const auto& [node, v] : c.initial_voltages()) {
        out << ".ic v(" << c.node_name(node) << ")=" << fmt(v) << '\n';
    }
    if (deck.tran) {
        out << ".tran " << fmt(deck.tran->dt) << ' ' << fmt(deck.tran->tstop);
        if (deck.tran->use_ic) {
            out << " uic";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace chio
