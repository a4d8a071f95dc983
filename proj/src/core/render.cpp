#include "core/render.hpp"

#include <algorithm>
#include <vector>

namespace orv {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out;
}

namespace {

std::string node_label(const InterPtr& i, const Signature& sig) {
    switch (i->kind()) {
        case NodeKind::Empty:
            return "o";
        case NodeKind::Action:
            return sig.action_text(i->act());
        case NodeKind::Strict:
            return "strict";
        case NodeKind::Alt:
            return "alt";
        case NodeKind::Coreg: {
            if (i->region().empty()) return "seq";
            if (i->region() == sig.all_lifelines()) return "par";
            std::string out = "coreg{";
            bool first = true;
            for (LifelineId l = 0; l < sig.lifeline_count(); ++l) {
                if (!i->region().contains(l)) continue;
                if (!first) out += ",";
                out += sig.lifeline_name(l);
                first = false;
            }
            return out + "}";
        }
        case NodeKind::LoopS:
            return "loopS";
        case NodeKind::LoopC: {
            if (i->region().empty()) return "loopW";
            if (i->region() == sig.all_lifelines()) return "loopP";
            std::string out = "loopC{";
            bool first = true;
            for (LifelineId l = 0; l < sig.lifeline_count(); ++l) {
                if (!i->region().contains(l)) continue;
                if (!first) out += ",";
                out += sig.lifeline_name(l);
                first = false;
            }
            return out + "}";
        }
    }
    return "?";
}

void term_dot_rec(const InterPtr& i, const Signature& sig, std::size_t& next,
                  std::ostringstream& os) {
    std::size_t id = next++;
    os << "  n" << id << " [label=\"" << dot_escape(node_label(i, sig)) << "\", shape="
       << (i->kind() == NodeKind::Action ? "ellipse" : "box") << "];\n";
    if (i->is_binary()) {
        std::size_t left = next;
        term_dot_rec(i->left(), sig, next, os);
        os << "  n" << id << " -> n" << left << ";\n";
        std::size_t right = next;
        term_dot_rec(i->right(), sig, next, os);
        os << "  n" << id << " -> n" << right << ";\n";
    } else if (i->is_loop()) {
        std::size_t child = next;
        term_dot_rec(i->child(), sig, next, os);
        os << "  n" << id << " -> n" << child << ";\n";
    }
}

}  // namespace

std::string interaction_to_dot(const InterPtr& i, const Signature& sig, bool vertical) {
    std::ostringstream os;
    os << "digraph interaction {\n";
    os << "  rankdir=" << (vertical ? "TB" : "LR") << ";\n";
    std::size_t next = 0;
    term_dot_rec(i, sig, next, os);
    os << "}\n";
    return os.str();
}

namespace {

class AsciiSketch {
  public:
    AsciiSketch(const Signature& sig) : sig_(sig) {
        col_width_ = 8;
        for (LifelineId l = 0; l < sig.lifeline_count(); ++l) {
            col_width_ = std::max(col_width_, sig.lifeline_name(l).size() + 4);
        }
        gutter_ = 2;
    }

    std::string render(const InterPtr& i) {
        std::string header(gutter_, ' ');
        for (LifelineId l = 0; l < sig_.lifeline_count(); ++l) {
            std::string name = sig_.lifeline_name(l);
            std::size_t pad = (col_width_ - name.size()) / 2;
            std::string cell(col_width_, ' ');
            for (std::size_t k = 0; k < name.size(); ++k) cell[pad + k] = name[k];
            header += cell;
        }
        lines_.push_back(header);
        walk(i, 0);
        std::string out;
        for (const std::string& line : lines_) {
            std::string trimmed = line;
            while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
            out += trimmed;
            out += "\n";
        }
        return out;
    }

  private:
    std::size_t center(LifelineId l) const { return gutter_ + l * col_width_ + col_width_ / 2; }

    std::string blank() const { return std::string(gutter_ + sig_.lifeline_count() * col_width_ + 6, ' '); }

    void put(std::string& row, std::size_t at, const std::string& text) {
        for (std::size_t k = 0; k < text.size() && at + k < row.size(); ++k) row[at + k] = text[k];
    }

    void arrow_row(std::size_t from, std::size_t to, const std::string& msg, char from_mark,
                   char to_mark) {
        std::string row = blank();
        std::size_t lo = std::min(from, to);
        std::size_t hi = std::max(from, to);
        for (std::size_t k = lo + 1; k < hi; ++k) row[k] = '-';
        row[from] = from_mark;
        row[to] = to_mark;
        if (hi - lo > msg.size() + 3) {
            put(row, lo + (hi - lo - msg.size()) / 2, msg);
        } else {
            put(row, hi + 2, msg);
        }
        lines_.push_back(row);
    }

    void action_row(const CommAction& a) {
        std::size_t c = center(a.lifeline);
        std::string row = blank();
        if (a.kind == ActionKind::Emit) {
            row[c] = '#';
            for (std::size_t k = 1; k <= 4; ++k) row[c + k] = '-';
            row[c + 5] = '>';
            row[c + 6] = '|';
            put(row, c + 8, sig_.action_text(a));
        } else {
            row[c] = '>';
            for (std::size_t k = 1; k <= 4; ++k) row[c - 1 - k + 1] = '-';
            put(row, c + 2, sig_.action_text(a));
        }
        lines_.push_back(row);
    }

    void op_row(int indent, const std::string& text) {
        lines_.push_back(std::string(static_cast<std::size_t>(indent), ' ') + text);
    }

    void walk(const InterPtr& i, int indent) {
        switch (i->kind()) {
            case NodeKind::Empty:
                op_row(indent, "o");
                return;
            case NodeKind::Action:
                action_row(i->act());
                return;
            default:
                break;
        }
        if (i->kind() == NodeKind::Strict) {
            // Render message passing as plain arrows.
            bool matched = false;
            if (i->left()->kind() == NodeKind::Action &&
                i->left()->act().kind == ActionKind::Emit) {
                const CommAction& e = i->left()->act();
                InterPtr cur = i->right();
                std::vector<LifelineId> rs;
                while (true) {
                    if (cur->kind() == NodeKind::Action &&
                        cur->act().kind == ActionKind::Receive && cur->act().message == e.message) {
                        rs.push_back(cur->act().lifeline);
                        matched = true;
                        break;
                    }
                    if (cur->kind() == NodeKind::Coreg && cur->region().empty() &&
                        cur->left()->kind() == NodeKind::Action &&
                        cur->left()->act().kind == ActionKind::Receive &&
                        cur->left()->act().message == e.message) {
                        rs.push_back(cur->left()->act().lifeline);
                        cur = cur->right();
                        continue;
                    }
                    matched = false;
                    break;
                }
                if (matched) {
                    for (LifelineId dst : rs) {
                        arrow_row(center(e.lifeline), center(dst), sig_.message_name(e.message),
                                  '#', '>');
                    }
                    return;
                }
            }
        }
        std::string name = node_label(i, sig_);
        op_row(indent, name + "[");
        if (i->is_loop()) {
            walk(i->child(), indent + 2);
        } else {
            walk(i->left(), indent + 2);
            walk(i->right(), indent + 2);
        }
        op_row(indent, "]");
    }

    const Signature& sig_;
    std::size_t col_width_;
    std::size_t gutter_;
    std::vector<std::string> lines_;
};

}  // namespace

std::string interaction_to_ascii(const InterPtr& i, const Signature& sig) {
    return AsciiSketch(sig).render(i);
}

std::string multitrace_text(const MultiTrace& mu, const Signature& sig) {
    std::string out;
    for (std::size_t k = 0; k < mu.component_count(); ++k) {
        if (k) out += " ";
        out += "[";
        bool first = true;
        for (LifelineId l = 0; l < sig.lifeline_count(); ++l) {
            if (!mu.partition().coloc(k).contains(l)) continue;
            if (!first) out += ",";
            out += sig.lifeline_name(l);
            first = false;
        }
        out += "]";
        const Trace& t = mu.component(k);
        if (t.empty()) {
            out += " .";
            continue;
        }
        for (std::size_t n = 0; n < t.size(); ++n) {
            out += (n == 0 ? " " : ".") + sig.action_text(t[n]);
        }
    }
    return out;
}

ExploreDotLogger::ExploreDotLogger(const Signature& sig, bool vertical)
    : sig_(sig), vertical_(vertical) {}

void ExploreDotLogger::on_node(const ExploreNodeInfo& node) {
    body_ << "  n" << node.id << " [shape=box, label=\"#" << node.id
          << (node.accepting ? " (accepts)" : "") << "\\nloops=" << node.loop_insts << "\"];\n";
}

void ExploreDotLogger::on_edge(std::size_t parent, std::size_t child, const CommAction& action,
                               const Position& position) {
    body_ << "  n" << parent << " -> n" << child << " [label=\""
          << dot_escape(sig_.action_text(action)) << "@" << (position.empty() ? "eps" : position)
          << "\"];\n";
}

void ExploreDotLogger::on_cut(std::size_t parent, CutReason reason) {
    std::size_t id = cut_marks_++;
    body_ << "  cut" << id << " [shape=point, label=\"\"];\n";
    body_ << "  n" << parent << " -> cut" << id << " [style=dashed, label=\""
          << to_string(reason) << "\"];\n";
}

std::string ExploreDotLogger::str() const {
    return "digraph exploration {\n  rankdir=" + std::string(vertical_ ? "TB" : "LR") + ";\n" +
           body_.str() + "}\n";
}

AnalysisDotLogger::AnalysisDotLogger(const Signature& sig, bool vertical)
    : sig_(sig), vertical_(vertical) {}

std::string AnalysisDotLogger::node_name(int phase, std::size_t id) const {
    return "p" + std::to_string(phase) + "n" + std::to_string(id);
}

void AnalysisDotLogger::on_phase(int phase, const std::string& name) {
    if (open_phase_ >= 0) body_ << "  }\n";
    open_phase_ = phase;
    body_ << "  subgraph cluster_" << phase << " {\n    label=\"" << dot_escape(name) << "\";\n";
}

void AnalysisDotLogger::on_node(int phase, std::size_t id, const AnalysisVertex& v,
                                const std::vector<int>& sim_before,
                                const std::vector<int>& sim_after) {
    // Per co-localization: observation started / ended flags and the number
    // of actions simulated before the start / after the end of observation.
    std::string flags;
    for (std::size_t k = 0; k < v.mu.component_count(); ++k) {
        bool started = (v.started >> k) & 1u;
        bool ended = v.mu.component(k).empty();
        if (k) flags += " ";
        flags += "c" + std::to_string(k) + ":";
        if (started) flags += "s";
        if (started && ended) flags += "e";
        if (!started && !ended) flags += "-";
        if (sim_before[k]) flags += " sb=" + std::to_string(sim_before[k]);
        if (sim_after[k]) flags += " sa=" + std::to_string(sim_after[k]);
    }
    body_ << "    " << node_name(phase, id) << " [shape=box, label=\"" << id << " "
          << dot_escape(to_string(v.measure)) << "\\n"
          << dot_escape(multitrace_text(v.mu, sig_)) << "\\n" << dot_escape(flags) << "\"];\n";
}

void AnalysisDotLogger::on_edge(int phase, std::size_t from, std::size_t to, const SuccEdge& e) {
    body_ << "    " << node_name(phase, from) << " -> " << node_name(phase, to) << " [label=\""
          << to_string(e.rule) << " " << dot_escape(sig_.action_text(e.action)) << "@"
          << (e.position.empty() ? "eps" : e.position) << "\"];\n";
}

void AnalysisDotLogger::on_sink(int phase, std::size_t from, RuleTag rule) {
    std::string name = "sink" + std::to_string(sink_count_++);
    bool ok = rule == RuleTag::Rp;
    body_ << "    " << name << " [shape=diamond, label=\"" << (ok ? "Ok" : "Ko")
          << "\", color=" << (ok ? "blue" : "red") << "];\n";
    body_ << "    " << node_name(phase, from) << " -> " << name << " [label=\""
          << to_string(rule) << "\"];\n";
}

std::string AnalysisDotLogger::str() const {
    std::string out = "digraph analysis {\n  rankdir=" + std::string(vertical_ ? "TB" : "LR") +
                      ";\n" + body_.str();
    if (open_phase_ >= 0) out += "  }\n";
    return out + "}\n";
}

}  // namespace orv
