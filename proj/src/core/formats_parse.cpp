#include <algorithm>
#include <cctype>
#include <map>

#include "core/formats.hpp"

namespace orv {

namespace {

enum class Tok : std::uint8_t {
    End, Ident, Int, LBrace, RBrace, LParen, RParen, LBracket, RBracket,
    Semi, Comma, Eq, Dot, Bang, Question, At, Hash, Pipe, DashDash, Arrow, Minus,
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::End: return "end of input";
        case Tok::Ident: return "identifier";
        case Tok::Int: return "integer";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Semi: return "';'";
        case Tok::Comma: return "','";
        case Tok::Eq: return "'='";
        case Tok::Dot: return "'.'";
        case Tok::Bang: return "'!'";
        case Tok::Question: return "'?'";
        case Tok::At: return "'@'";
        case Tok::Hash: return "'#'";
        case Tok::Pipe: return "'|'";
        case Tok::DashDash: return "'--'";
        case Tok::Arrow: return "'->'";
        case Tok::Minus: return "'-'";
    }
    return "?";
}

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(tok_.line, tok_.col, message);
    }

    Token expect(Tok kind, const std::string& what) {
        if (tok_.kind != kind) {
            fail("expected " + what + ", found " + describe(tok_));
        }
        return take();
    }

    bool accept(Tok kind) {
        if (tok_.kind != kind) return false;
        advance();
        return true;
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::Ident) return "'" + t.text + "'";
        if (t.kind == Tok::Int) return "'" + std::to_string(t.value) + "'";
        return tok_name(t.kind);
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            bump();
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ident.push_back(text_[pos_]);
                bump();
            }
            tok_.kind = Tok::Ident;
            tok_.text = std::move(ident);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                bump();
            }
            tok_.kind = Tok::Int;
            tok_.value = v;
            return;
        }
        bump();
        switch (c) {
            case '{': tok_.kind = Tok::LBrace; return;
            case '}': tok_.kind = Tok::RBrace; return;
            case '(': tok_.kind = Tok::LParen; return;
            case ')': tok_.kind = Tok::RParen; return;
            case '[': tok_.kind = Tok::LBracket; return;
            case ']': tok_.kind = Tok::RBracket; return;
            case ';': tok_.kind = Tok::Semi; return;
            case ',': tok_.kind = Tok::Comma; return;
            case '=': tok_.kind = Tok::Eq; return;
            case '.': tok_.kind = Tok::Dot; return;
            case '!': tok_.kind = Tok::Bang; return;
            case '?': tok_.kind = Tok::Question; return;
            case '@': tok_.kind = Tok::At; return;
            case '#': tok_.kind = Tok::Hash; return;
            case '|': tok_.kind = Tok::Pipe; return;
            case '-':
                if (pos_ < text_.size() && text_[pos_] == '-') {
                    bump();
                    tok_.kind = Tok::DashDash;
                } else if (pos_ < text_.size() && text_[pos_] == '>') {
                    bump();
                    tok_.kind = Tok::Arrow;
                } else {
                    tok_.kind = Tok::Minus;
                }
                return;
            default:
                throw ParseError(tok_.line, tok_.col, std::string("unexpected character '") + c + "'");
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

[[noreturn]] void fail_at(const Token& t, const std::string& message) {
    throw ParseError(t.line, t.col, message);
}

}  // namespace

// ---------------------------------------------------------------------------
// .hsf

Signature parse_hsf(const std::string& text) {
    Lexer lex(text);
    Signature sig;
    bool saw_messages = false;
    bool saw_lifelines = false;
    while (lex.peek().kind != Tok::End) {
        lex.expect(Tok::At, "'@'");
        Token section = lex.expect(Tok::Ident, "'message' or 'lifeline'");
        bool messages;
        if (section.text == "message") {
            if (saw_messages) fail_at(section, "duplicate @message block");
            saw_messages = true;
            messages = true;
        } else if (section.text == "lifeline") {
            if (saw_lifelines) fail_at(section, "duplicate @lifeline block");
            saw_lifelines = true;
            messages = false;
        } else {
            fail_at(section, "unknown block '@" + section.text + "'");
        }
        lex.expect(Tok::LBrace, "'{'");
        bool first = true;
        while (!lex.accept(Tok::RBrace)) {
            if (!first) lex.expect(Tok::Semi, "';' or '}'");
            if (lex.peek().kind == Tok::RBrace) {  // tolerate a trailing ';'
                lex.take();
                break;
            }
            Token id = lex.expect(Tok::Ident, "identifier");
            try {
                if (messages) {
                    sig.add_message(id.text);
                } else {
                    sig.add_lifeline(id.text);
                }
            } catch (const Error& e) {
                fail_at(id, e.what());
            }
            first = false;
        }
    }
    return sig;
}

// ---------------------------------------------------------------------------
// .hif

namespace {

class HifParser {
  public:
    HifParser(const std::string& text, const Signature& sig) : lex_(text), sig_(sig) {}

    InterPtr parse() {
        InterPtr i = parse_expr();
        if (lex_.peek().kind != Tok::End) {
            lex_.fail("expected end of input after interaction term");
        }
        return i;
    }

  private:
    LifelineId lifeline_of(const Token& t) {
        auto l = sig_.find_lifeline(t.text);
        if (!l) fail_at(t, "undeclared lifeline '" + t.text + "'");
        return *l;
    }

    MessageId message_of(const Token& t) {
        auto m = sig_.find_message(t.text);
        if (!m) fail_at(t, "undeclared message '" + t.text + "'");
        return *m;
    }

    LifelineSet parse_region() {
        lex_.expect(Tok::LParen, "'('");
        LifelineSet region;
        while (true) {
            Token id = lex_.expect(Tok::Ident, "lifeline");
            region = region.with(lifeline_of(id));
            if (lex_.accept(Tok::RParen)) break;
            lex_.expect(Tok::Comma, "',' or ')'");
        }
        return region;
    }

    std::vector<InterPtr> parse_args(std::size_t min_arity) {
        Token open = lex_.expect(Tok::LParen, "'('");
        std::vector<InterPtr> args;
        while (true) {
            args.push_back(parse_expr());
            if (lex_.accept(Tok::RParen)) break;
            lex_.expect(Tok::Comma, "',' or ')'");
        }
        if (args.size() < min_arity) {
            fail_at(open, "operator needs at least " + std::to_string(min_arity) + " arguments");
        }
        return args;
    }

    template <typename F>
    InterPtr fold_right(std::vector<InterPtr> args, F f) {
        InterPtr acc = args.back();
        for (std::size_t k = args.size() - 1; k-- > 0;) {
            acc = f(args[k], acc);
        }
        return acc;
    }

    InterPtr parse_operator(const Token& name) {
        if (name.text == "strict" || name.text == "alt") {
            auto args = parse_args(2);
            bool is_strict = name.text == "strict";
            return fold_right(std::move(args), [&](InterPtr a, InterPtr b) {
                return is_strict ? Interaction::strict(std::move(a), std::move(b))
                                 : Interaction::alt(std::move(a), std::move(b));
            });
        }
        if (name.text == "seq" || name.text == "par") {
            LifelineSet region =
                name.text == "seq" ? LifelineSet::empty_set() : sig_.all_lifelines();
            auto args = parse_args(2);
            return fold_right(std::move(args), [&](InterPtr a, InterPtr b) {
                return Interaction::coreg(region, std::move(a), std::move(b));
            });
        }
        if (name.text == "coreg") {
            LifelineSet region = parse_region();
            auto args = parse_args(2);
            return fold_right(std::move(args), [&](InterPtr a, InterPtr b) {
                return Interaction::coreg(region, std::move(a), std::move(b));
            });
        }
        if (name.text == "loopS" || name.text == "loopW" || name.text == "loopP") {
            auto args = parse_args(1);
            if (args.size() != 1) fail_at(name, "loop operators take exactly one argument");
            if (name.text == "loopS") return Interaction::loop_s(args[0]);
            LifelineSet region =
                name.text == "loopW" ? LifelineSet::empty_set() : sig_.all_lifelines();
            return Interaction::loop_c(region, args[0]);
        }
        if (name.text == "loopC") {
            LifelineSet region = parse_region();
            auto args = parse_args(1);
            if (args.size() != 1) fail_at(name, "loop operators take exactly one argument");
            return Interaction::loop_c(region, args[0]);
        }
        fail_at(name, "unknown operator or undeclared identifier '" + name.text + "'");
    }

    // Emission "l -- m ->|", passing "l -- m -> l2", broadcast
    // "l -- m -> (l2,l3)", reception "m -> l".
    InterPtr parse_action(const Token& first) {
        if (lex_.peek().kind == Tok::DashDash) {
            LifelineId src = lifeline_of(first);
            lex_.take();
            Token msg_tok = lex_.expect(Tok::Ident, "message");
            MessageId msg = message_of(msg_tok);
            lex_.expect(Tok::Arrow, "'->'");
            if (lex_.accept(Tok::Pipe)) {
                return Interaction::action(emit(src, msg));
            }
            std::vector<LifelineId> dests;
            if (lex_.accept(Tok::LParen)) {
                while (true) {
                    Token id = lex_.expect(Tok::Ident, "lifeline");
                    dests.push_back(lifeline_of(id));
                    if (lex_.accept(Tok::RParen)) break;
                    lex_.expect(Tok::Comma, "',' or ')'");
                }
            } else {
                Token id = lex_.expect(Tok::Ident, "target lifeline, '(' or '|'");
                dests.push_back(lifeline_of(id));
            }
            InterPtr receptions = Interaction::action(receive(dests.back(), msg));
            for (std::size_t k = dests.size() - 1; k-- > 0;) {
                receptions = Interaction::coreg(LifelineSet::empty_set(),
                                                Interaction::action(receive(dests[k], msg)),
                                                receptions);
            }
            return Interaction::strict(Interaction::action(emit(src, msg)), receptions);
        }
        // "m -> l" reception
        MessageId msg = message_of(first);
        lex_.expect(Tok::Arrow, "'->'");
        Token id = lex_.expect(Tok::Ident, "lifeline");
        return Interaction::action(receive(lifeline_of(id), msg));
    }

    InterPtr parse_expr() {
        Token t = lex_.expect(Tok::Ident, "interaction term");
        if (t.text == "o" && lex_.peek().kind != Tok::DashDash) {
            return Interaction::empty();
        }
        if (lex_.peek().kind == Tok::DashDash || lex_.peek().kind == Tok::Arrow) {
            return parse_action(t);
        }
        return parse_operator(t);
    }

    Lexer lex_;
    const Signature& sig_;
};

}  // namespace

InterPtr parse_hif(const std::string& text, const Signature& sig) {
    return HifParser(text, sig).parse();
}

// ---------------------------------------------------------------------------
// .htf

MultiTrace parse_htf(const std::string& text, const Signature& sig,
                     const std::optional<Partition>& expected) {
    Lexer lex(text);
    struct Component {
        LifelineSet coloc;
        Trace trace;
        Token where;
    };
    std::vector<Component> comps;
    bool first = true;
    while (lex.peek().kind != Tok::End) {
        if (!first) lex.expect(Tok::Semi, "';'");
        first = false;
        if (lex.peek().kind == Tok::End) break;  // tolerate a trailing ';'
        Component comp;
        comp.where = lex.expect(Tok::LBracket, "'['");
        bool infer = false;
        if (lex.accept(Tok::Hash)) {
            Token kw = lex.expect(Tok::Ident, "'all' or 'any'");
            if (kw.text == "all") {
                comp.coloc = sig.all_lifelines();
            } else if (kw.text == "any") {
                infer = true;
            } else {
                fail_at(kw, "unknown co-localization keyword '#" + kw.text + "'");
            }
            lex.expect(Tok::RBracket, "']'");
        } else {
            while (true) {
                Token id = lex.expect(Tok::Ident, "lifeline");
                auto l = sig.find_lifeline(id.text);
                if (!l) fail_at(id, "undeclared lifeline '" + id.text + "'");
                comp.coloc = comp.coloc.with(*l);
                if (lex.accept(Tok::RBracket)) break;
                lex.expect(Tok::Comma, "',' or ']'");
            }
        }
        // Dot-separated actions; a component may be empty.
        while (lex.peek().kind == Tok::Ident) {
            Token lf = lex.take();
            auto l = sig.find_lifeline(lf.text);
            if (!l) fail_at(lf, "undeclared lifeline '" + lf.text + "'");
            CommAction a;
            a.lifeline = *l;
            if (lex.accept(Tok::Bang)) {
                a.kind = ActionKind::Emit;
            } else if (lex.accept(Tok::Question)) {
                a.kind = ActionKind::Receive;
            } else {
                lex.fail("expected '!' or '?'");
            }
            Token msg = lex.expect(Tok::Ident, "message");
            auto m = sig.find_message(msg.text);
            if (!m) fail_at(msg, "undeclared message '" + msg.text + "'");
            a.message = *m;
            if (infer) comp.coloc = comp.coloc.with(a.lifeline);
            comp.trace.push_back(a);
            if (!lex.accept(Tok::Dot)) break;
        }
        if (infer && comp.coloc.empty()) {
            fail_at(comp.where, "cannot infer a co-localization from an empty component");
        }
        if (!infer) {
            for (const CommAction& a : comp.trace) {
                if (!comp.coloc.contains(a.lifeline)) {
                    fail_at(comp.where, "action on lifeline '" + sig.lifeline_name(a.lifeline) +
                                            "' outside its co-localization");
                }
            }
        }
        comps.push_back(std::move(comp));
    }

    LifelineSet covered;
    for (const Component& c : comps) {
        if (!covered.intersect(c.coloc).empty()) {
            fail_at(c.where, "overlapping co-localizations");
        }
        covered = covered.unite(c.coloc);
    }
    std::vector<LifelineSet> colocs;
    for (const Component& c : comps) colocs.push_back(c.coloc);
    // Lifelines not covered by any declared co-localization each get a fresh
    // singleton with an empty trace.
    for (LifelineId l = 0; l < sig.lifeline_count(); ++l) {
        if (!covered.contains(l)) colocs.push_back(LifelineSet::single(l));
    }
    auto partition = std::make_shared<Partition>(std::move(colocs), sig.all_lifelines());
    if (expected && !(*partition == *expected)) {
        throw ParseError(1, 1, "multi-trace partition does not match the expected partition");
    }
    std::vector<Trace> traces(partition->size());
    for (Component& c : comps) {
        std::size_t k = partition->coloc_of(static_cast<LifelineId>(
            __builtin_ctzll(c.coloc.bits())));
        traces[k] = std::move(c.trace);
    }
    return MultiTrace(std::move(partition), std::move(traces));
}

// ---------------------------------------------------------------------------
// .hcf

namespace {

class HcfParser {
  public:
    explicit HcfParser(const std::string& text) : lex_(text) {}

    ConfigFile parse() {
        ConfigFile cfg;
        while (lex_.peek().kind != Tok::End) {
            lex_.expect(Tok::At, "'@'");
            Token section = lex_.expect(Tok::Ident, "'explore_option' or 'analyze_option'");
            if (section.text == "explore_option") {
                if (cfg.explore) fail_at(section, "duplicate @explore_option section");
                cfg.explore = parse_explore();
            } else if (section.text == "analyze_option") {
                if (cfg.analyze) fail_at(section, "duplicate @analyze_option section");
                cfg.analyze = parse_analyze();
            } else {
                fail_at(section, "unknown section '@" + section.text + "'");
            }
        }
        return cfg;
    }

  private:
    bool parse_bool() {
        Token t = lex_.expect(Tok::Ident, "'true' or 'false'");
        if (t.text == "true") return true;
        if (t.text == "false") return false;
        fail_at(t, "expected 'true' or 'false'");
    }

    long parse_int() {
        bool neg = lex_.accept(Tok::Minus);
        Token t = lex_.expect(Tok::Int, "integer");
        return neg ? -t.value : t.value;
    }

    PartitionSpec parse_partition_value() {
        PartitionSpec spec;
        if (lex_.peek().kind == Tok::Ident) {
            Token t = lex_.take();
            if (t.text == "discrete") {
                spec.kind = PartitionSpec::Kind::Discrete;
            } else if (t.text == "trivial") {
                spec.kind = PartitionSpec::Kind::Trivial;
            } else {
                fail_at(t, "expected 'discrete', 'trivial' or '{'");
            }
            return spec;
        }
        lex_.expect(Tok::LBrace, "'{'");
        spec.kind = PartitionSpec::Kind::Groups;
        while (true) {
            lex_.expect(Tok::LParen, "'('");
            std::vector<std::string> group;
            while (true) {
                group.push_back(lex_.expect(Tok::Ident, "lifeline").text);
                if (lex_.accept(Tok::RParen)) break;
                lex_.expect(Tok::Comma, "',' or ')'");
            }
            spec.groups.push_back(std::move(group));
            if (lex_.accept(Tok::RBrace)) break;
            lex_.expect(Tok::Comma, "',' or '}'");
        }
        return spec;
    }

    std::vector<LoggerSpec> parse_loggers(bool tracegen_allowed) {
        std::vector<LoggerSpec> out;
        lex_.expect(Tok::LBracket, "'['");
        if (lex_.accept(Tok::RBracket)) return out;
        while (true) {
            Token name = lex_.expect(Tok::Ident, "'graphic' or 'tracegen'");
            LoggerSpec spec;
            if (name.text == "graphic") {
                spec.type = LoggerSpec::Type::Graphic;
                if (lex_.accept(Tok::LBracket)) {
                    while (true) {
                        Token opt = lex_.expect(Tok::Ident, "graphic option");
                        if (opt.text == "svg" || opt.text == "png" || opt.text == "dot") {
                            // Drawing is emitted as DOT regardless of the
                            // requested raster format.
                        } else if (opt.text == "vertical") {
                            spec.graphic.vertical = true;
                        } else if (opt.text == "horizontal") {
                            spec.graphic.vertical = false;
                        } else {
                            fail_at(opt, "unknown graphic option '" + opt.text + "'");
                        }
                        if (lex_.accept(Tok::RBracket)) break;
                        lex_.expect(Tok::Comma, "',' or ']'");
                    }
                }
            } else if (name.text == "tracegen") {
                if (!tracegen_allowed) {
                    fail_at(name, "the tracegen logger is only available for exploration");
                }
                spec.type = LoggerSpec::Type::Tracegen;
                if (lex_.accept(Tok::LBracket)) {
                    while (true) {
                        Token opt = lex_.expect(Tok::Ident, "tracegen option");
                        if (opt.text == "generation") {
                            lex_.expect(Tok::Eq, "'='");
                            Token mode = lex_.expect(Tok::Ident, "'exact', 'prefix' or 'terminal'");
                            if (mode.text == "exact") {
                                spec.tracegen.mode = GenMode::Exact;
                            } else if (mode.text == "prefix") {
                                spec.tracegen.mode = GenMode::Prefix;
                            } else if (mode.text == "terminal") {
                                spec.tracegen.mode = GenMode::Terminal;
                            } else {
                                fail_at(mode, "unknown generation mode '" + mode.text + "'");
                            }
                        } else if (opt.text == "partition") {
                            lex_.expect(Tok::Eq, "'='");
                            spec.tracegen.partition = parse_partition_value();
                        } else {
                            fail_at(opt, "unknown tracegen option '" + opt.text + "'");
                        }
                        if (lex_.accept(Tok::RBracket)) break;
                        lex_.expect(Tok::Comma, "',' or ']'");
                    }
                }
            } else {
                fail_at(name, "unknown logger '" + name.text + "'");
            }
            out.push_back(std::move(spec));
            if (lex_.accept(Tok::RBracket)) break;
            lex_.expect(Tok::Comma, "',' or ']'");
        }
        return out;
    }

    Strategy parse_strategy() {
        Token t = lex_.expect(Tok::Ident, "'BFS', 'DFS' or 'HCS'");
        if (t.text == "BFS") return Strategy::BFS;
        if (t.text == "DFS") return Strategy::DFS;
        if (t.text == "HCS") return Strategy::HCS;
        fail_at(t, "unknown strategy '" + t.text + "'");
    }

    ExploreFilters parse_filters() {
        ExploreFilters f;
        lex_.expect(Tok::LBracket, "'['");
        if (lex_.accept(Tok::RBracket)) return f;
        while (true) {
            Token key = lex_.expect(Tok::Ident, "filter name");
            lex_.expect(Tok::Eq, "'='");
            long value = parse_int();
            if (value <= 0) fail_at(key, "filter bounds must be positive");
            if (key.text == "max_depth") {
                f.max_depth = value;
            } else if (key.text == "max_loop_depth") {
                f.max_loop_insts = value;
            } else if (key.text == "max_node_number") {
                f.max_node_number = static_cast<std::size_t>(value);
            } else {
                fail_at(key, "unknown filter '" + key.text + "'");
            }
            if (lex_.accept(Tok::RBracket)) break;
            lex_.expect(Tok::Comma, "',' or ']'");
        }
        return f;
    }

    Priorities parse_priorities() {
        Priorities p;
        if (lex_.peek().kind == Tok::Ident) {
            Token t = lex_.take();
            if (t.text == "random") {
                p.mode = Priorities::Mode::Random;
                if (lex_.accept(Tok::LBracket)) {
                    p.seed = static_cast<std::uint64_t>(parse_int());
                    lex_.expect(Tok::RBracket, "']'");
                }
            } else if (t.text == "lexicographic") {
                p.mode = Priorities::Mode::Lexicographic;
            } else {
                fail_at(t, "expected 'lexicographic', 'random' or '['");
            }
            return p;
        }
        lex_.expect(Tok::LBracket, "'['");
        while (true) {
            Token key = lex_.expect(Tok::Ident, "priority name");
            lex_.expect(Tok::Eq, "'='");
            long value = parse_int();
            if (key.text == "emission") {
                p.emission = value;
            } else if (key.text == "reception") {
                p.reception = value;
            } else if (key.text == "loop") {
                p.loop = value;
            } else if (key.text == "simu") {
                p.simu = value;
            } else {
                fail_at(key, "unknown priority '" + key.text + "'");
            }
            if (lex_.accept(Tok::RBracket)) break;
            lex_.expect(Tok::Comma, "',' or ']'");
        }
        return p;
    }

    void parse_simulate_options(MeasureOptions& m) {
        if (!lex_.accept(Tok::LBracket)) return;
        while (true) {
            Token key = lex_.expect(Tok::Ident, "simulate option");
            if (key.text == "before") {
                lex_.expect(Tok::Eq, "'='");
                m.simulate_before_start = parse_bool();
            } else if (key.text == "reset") {
                lex_.expect(Tok::Eq, "'='");
                m.reset_on_execute = parse_bool();
            } else if (key.text == "multiply") {
                lex_.expect(Tok::Eq, "'='");
                m.multiply_by_mt_length = parse_bool();
            } else if (key.text == "loop") {
                Token sub = lex_.expect(Tok::Ident, "'max' or 'num'");
                if (sub.text == "max") {
                    Token which = lex_.expect(Tok::Ident, "'depth' or 'num'");
                    if (which.text == "depth") {
                        m.loop_source = LoopBudgetSource::MaxNestedDepth;
                    } else if (which.text == "num") {
                        m.loop_source = LoopBudgetSource::TotalLoopCount;
                    } else {
                        fail_at(which, "expected 'depth' or 'num'");
                    }
                } else if (sub.text == "num") {
                    lex_.expect(Tok::Eq, "'='");
                    m.loop_source = LoopBudgetSource::Fixed;
                    m.loop_fixed = parse_int();
                } else {
                    fail_at(sub, "expected 'max' or 'num'");
                }
            } else if (key.text == "act") {
                Token sub = lex_.expect(Tok::Ident, "'outside' or 'num'");
                if (sub.text == "outside") {
                    m.act_source = ActBudgetSource::ActionsOutsideLoops;
                } else if (sub.text == "num") {
                    lex_.expect(Tok::Eq, "'='");
                    m.act_source = ActBudgetSource::Fixed;
                    m.act_fixed = parse_int();
                } else {
                    fail_at(sub, "expected 'outside' or 'num'");
                }
            } else {
                fail_at(key, "unknown simulate option '" + key.text + "'");
            }
            if (lex_.accept(Tok::RBracket)) break;
            lex_.expect(Tok::Comma, "',' or ']'");
        }
    }

    ExploreOptions parse_explore() {
        ExploreOptions opts;
        lex_.expect(Tok::LBrace, "'{'");
        bool first = true;
        while (!lex_.accept(Tok::RBrace)) {
            if (!first) {
                lex_.expect(Tok::Semi, "';' or '}'");
                if (lex_.accept(Tok::RBrace)) break;
            }
            first = false;
            Token key = lex_.expect(Tok::Ident, "option name");
            lex_.expect(Tok::Eq, "'='");
            if (key.text == "loggers") {
                opts.loggers = parse_loggers(/*tracegen_allowed=*/true);
            } else if (key.text == "strategy") {
                opts.strategy = parse_strategy();
            } else if (key.text == "filters") {
                opts.filters = parse_filters();
            } else if (key.text == "priorities") {
                opts.priorities = parse_priorities();
            } else {
                fail_at(key, "unknown exploration option '" + key.text + "'");
            }
        }
        return opts;
    }

    AnalyzeOptions parse_analyze() {
        AnalyzeOptions opts;
        lex_.expect(Tok::LBrace, "'{'");
        bool first = true;
        while (!lex_.accept(Tok::RBrace)) {
            if (!first) {
                lex_.expect(Tok::Semi, "';' or '}'");
                if (lex_.accept(Tok::RBrace)) break;
            }
            first = false;
            Token key = lex_.expect(Tok::Ident, "option name");
            lex_.expect(Tok::Eq, "'='");
            if (key.text == "loggers") {
                opts.loggers = parse_loggers(/*tracegen_allowed=*/false);
            } else if (key.text == "strategy") {
                opts.strategy = parse_strategy();
            } else if (key.text == "priorities") {
                opts.priorities = parse_priorities();
            } else if (key.text == "goal") {
                Token t = lex_.expect(Tok::Ident, "'Pass' or 'WeakPass'");
                if (t.text == "Pass") {
                    opts.goal = Verdict::Pass;
                } else if (t.text == "WeakPass") {
                    opts.goal = Verdict::WeakPass;
                } else {
                    fail_at(t, "unknown goal '" + t.text + "'");
                }
            } else if (key.text == "analysis_kind") {
                Token kind = lex_.expect(Tok::Ident, "'accept', 'prefix' or 'simulate'");
                if (kind.text == "accept") {
                    opts.kind = AnalysisKind::Accept;
                } else if (kind.text == "prefix") {
                    opts.kind = AnalysisKind::Prefix;
                } else if (kind.text == "simulate") {
                    opts.kind = AnalysisKind::Simulate;
                    parse_simulate_options(opts.measure);
                } else {
                    fail_at(kind, "unknown analysis kind '" + kind.text + "'");
                }
            } else {
                fail_at(key, "unknown analysis option '" + key.text + "'");
            }
        }
        return opts;
    }

    Lexer lex_;
};

}  // namespace

ConfigFile parse_hcf(const std::string& text) { return HcfParser(text).parse(); }

Partition resolve_partition(const PartitionSpec& spec, const Signature& sig) {
    switch (spec.kind) {
        case PartitionSpec::Kind::Discrete:
            return Partition::discrete(sig);
        case PartitionSpec::Kind::Trivial:
            return Partition::trivial(sig);
        case PartitionSpec::Kind::Groups: {
            LifelineSet covered;
            std::vector<LifelineSet> colocs;
            for (const auto& group : spec.groups) {
                LifelineSet coloc;
                for (const std::string& name : group) {
                    auto l = sig.find_lifeline(name);
                    if (!l) throw Error("undeclared lifeline '" + name + "' in partition");
                    coloc = coloc.with(*l);
                }
                covered = covered.unite(coloc);
                colocs.push_back(coloc);
            }
            for (LifelineId l = 0; l < sig.lifeline_count(); ++l) {
                if (!covered.contains(l)) colocs.push_back(LifelineSet::single(l));
            }
            return Partition(std::move(colocs), sig.all_lifelines());
        }
    }
    throw Error("invalid partition spec");
}

}  // namespace orv
