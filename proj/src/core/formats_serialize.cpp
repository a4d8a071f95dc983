#include <sstream>

#include "core/formats.hpp"

namespace orv {

namespace {

// Re-detects the message-passing sugar: strict(l!m, r?m) and the broadcast
// strict(l!m, seq(r1?m, seq(r2?m, ...))).
bool match_passing(const InterPtr& i, CommAction& src, std::vector<LifelineId>& dests) {
    if (i->kind() != NodeKind::Strict) return false;
    if (i->left()->kind() != NodeKind::Action) return false;
    const CommAction& e = i->left()->act();
    if (e.kind != ActionKind::Emit) return false;
    std::vector<LifelineId> out;
    InterPtr cur = i->right();
    while (true) {
        if (cur->kind() == NodeKind::Action) {
            const CommAction& r = cur->act();
            if (r.kind != ActionKind::Receive || r.message != e.message) return false;
            out.push_back(r.lifeline);
            break;
        }
        if (cur->kind() == NodeKind::Coreg && cur->region().empty() &&
            cur->left()->kind() == NodeKind::Action) {
            const CommAction& r = cur->left()->act();
            if (r.kind != ActionKind::Receive || r.message != e.message) return false;
            out.push_back(r.lifeline);
            cur = cur->right();
            continue;
        }
        return false;
    }
    src = e;
    dests = std::move(out);
    return true;
}

class HifWriter {
  public:
    explicit HifWriter(const Signature& sig) : sig_(sig) {}

    std::string write(const InterPtr& i) {
        std::ostringstream os;
        emit(i, os);
        return os.str();
    }

  private:
    std::string op_name(const InterPtr& i) const {
        switch (i->kind()) {
            case NodeKind::Strict:
                return "strict";
            case NodeKind::Alt:
                return "alt";
            case NodeKind::Coreg:
                if (i->region().empty()) return "seq";
                if (i->region() == sig_.all_lifelines()) return "par";
                return "coreg" + region_text(i->region());
            case NodeKind::LoopS:
                return "loopS";
            case NodeKind::LoopC:
                if (i->region().empty()) return "loopW";
                if (i->region() == sig_.all_lifelines()) return "loopP";
                return "loopC" + region_text(i->region());
            default:
                return "";
        }
    }

    std::string region_text(LifelineSet region) const {
        std::string out = "(";
        bool first = true;
        for (LifelineId l = 0; l < sig_.lifeline_count(); ++l) {
            if (!region.contains(l)) continue;
            if (!first) out += ",";
            out += sig_.lifeline_name(l);
            first = false;
        }
        return out + ")";
    }

    static bool same_operator(const InterPtr& a, const InterPtr& b) {
        if (a->kind() != b->kind()) return false;
        if (a->kind() == NodeKind::Coreg) return a->region() == b->region();
        return true;
    }

    void emit(const InterPtr& i, std::ostringstream& os) {
        CommAction src;
        std::vector<LifelineId> dests;
        if (match_passing(i, src, dests)) {
            os << sig_.lifeline_name(src.lifeline) << " -- " << sig_.message_name(src.message)
               << " -> ";
            if (dests.size() == 1) {
                os << sig_.lifeline_name(dests[0]);
            } else {
                os << "(";
                for (std::size_t k = 0; k < dests.size(); ++k) {
                    if (k) os << ",";
                    os << sig_.lifeline_name(dests[k]);
                }
                os << ")";
            }
            return;
        }
        switch (i->kind()) {
            case NodeKind::Empty:
                os << "o";
                return;
            case NodeKind::Action: {
                const CommAction& a = i->act();
                if (a.kind == ActionKind::Emit) {
                    os << sig_.lifeline_name(a.lifeline) << " -- " << sig_.message_name(a.message)
                       << " ->|";
                } else {
                    os << sig_.message_name(a.message) << " -> " << sig_.lifeline_name(a.lifeline);
                }
                return;
            }
            case NodeKind::Strict:
            case NodeKind::Alt:
            case NodeKind::Coreg: {
                // Right-nested chains of one operator print n-ary.
                os << op_name(i) << "(";
                InterPtr cur = i;
                bool first = true;
                while (true) {
                    if (!first) os << ",";
                    first = false;
                    emit(cur->left(), os);
                    CommAction s2;
                    std::vector<LifelineId> d2;
                    if (same_operator(cur->right(), cur) && !match_passing(cur->right(), s2, d2)) {
                        cur = cur->right();
                    } else {
                        os << ",";
                        emit(cur->right(), os);
                        break;
                    }
                }
                os << ")";
                return;
            }
            case NodeKind::LoopS:
            case NodeKind::LoopC:
                os << op_name(i) << "(";
                emit(i->child(), os);
                os << ")";
                return;
        }
    }

    const Signature& sig_;
};

}  // namespace

std::string serialize_hsf(const Signature& sig) {
    std::ostringstream os;
    os << "@message{\n    ";
    for (std::size_t k = 0; k < sig.message_count(); ++k) {
        if (k) os << ";";
        os << sig.message_name(static_cast<MessageId>(k));
    }
    os << "\n}\n@lifeline{\n    ";
    for (std::size_t k = 0; k < sig.lifeline_count(); ++k) {
        if (k) os << ";";
        os << sig.lifeline_name(static_cast<LifelineId>(k));
    }
    os << "\n}\n";
    return os.str();
}

std::string serialize_hif(const InterPtr& i, const Signature& sig) {
    return HifWriter(sig).write(i);
}

std::string serialize_htf(const MultiTrace& mu, const Signature& sig) {
    std::ostringstream os;
    for (std::size_t k = 0; k < mu.component_count(); ++k) {
        if (k) os << ";\n";
        os << "[";
        bool first = true;
        LifelineSet coloc = mu.partition().coloc(k);
        for (LifelineId l = 0; l < sig.lifeline_count(); ++l) {
            if (!coloc.contains(l)) continue;
            if (!first) os << ",";
            os << sig.lifeline_name(l);
            first = false;
        }
        os << "]";
        const Trace& t = mu.component(k);
        for (std::size_t n = 0; n < t.size(); ++n) {
            os << (n == 0 ? " " : ".") << sig.action_text(t[n]);
        }
    }
    os << "\n";
    return os.str();
}

namespace {

std::string priorities_text(const Priorities& p) {
    if (p.mode == Priorities::Mode::Random) {
        if (p.seed == 0) return "random";
        return "random[" + std::to_string(p.seed) + "]";
    }
    if (p.emission == 0 && p.reception == 0 && p.loop == 0 && p.simu == 0) {
        return "lexicographic";
    }
    std::string out = "[";
    bool first = true;
    auto add = [&](const char* name, long v) {
        if (v == 0) return;
        if (!first) out += ", ";
        out += std::string(name) + " = " + std::to_string(v);
        first = false;
    };
    add("emission", p.emission);
    add("reception", p.reception);
    add("loop", p.loop);
    add("simu", p.simu);
    return out + "]";
}

std::string partition_text(const PartitionSpec& spec) {
    switch (spec.kind) {
        case PartitionSpec::Kind::Discrete:
            return "discrete";
        case PartitionSpec::Kind::Trivial:
            return "trivial";
        case PartitionSpec::Kind::Groups: {
            std::string out = "{";
            for (std::size_t g = 0; g < spec.groups.size(); ++g) {
                if (g) out += ",";
                out += "(";
                for (std::size_t k = 0; k < spec.groups[g].size(); ++k) {
                    if (k) out += ",";
                    out += spec.groups[g][k];
                }
                out += ")";
            }
            return out + "}";
        }
    }
    return "discrete";
}

std::string loggers_text(const std::vector<LoggerSpec>& loggers) {
    std::string out = "[";
    for (std::size_t k = 0; k < loggers.size(); ++k) {
        if (k) out += ", ";
        const LoggerSpec& l = loggers[k];
        if (l.type == LoggerSpec::Type::Graphic) {
            out += std::string("graphic[dot,") + (l.graphic.vertical ? "vertical" : "horizontal") + "]";
        } else {
            out += "tracegen[generation = ";
            out += l.tracegen.mode == GenMode::Exact
                       ? "exact"
                       : (l.tracegen.mode == GenMode::Prefix ? "prefix" : "terminal");
            out += ", partition = " + partition_text(l.tracegen.partition) + "]";
        }
    }
    return out + "]";
}

const char* strategy_text(Strategy s) {
    switch (s) {
        case Strategy::BFS:
            return "BFS";
        case Strategy::DFS:
            return "DFS";
        case Strategy::HCS:
            return "HCS";
    }
    return "BFS";
}

std::string simulate_options_text(const MeasureOptions& m) {
    std::string out = "[";
    out += std::string("before = ") + (m.simulate_before_start ? "true" : "false");
    out += ", loop ";
    switch (m.loop_source) {
        case LoopBudgetSource::MaxNestedDepth:
            out += "max depth";
            break;
        case LoopBudgetSource::TotalLoopCount:
            out += "max num";
            break;
        case LoopBudgetSource::Fixed:
            out += "num = " + std::to_string(m.loop_fixed);
            break;
    }
    out += std::string(", reset = ") + (m.reset_on_execute ? "true" : "false");
    out += std::string(", multiply = ") + (m.multiply_by_mt_length ? "true" : "false");
    out += ", act ";
    if (m.act_source == ActBudgetSource::ActionsOutsideLoops) {
        out += "outside";
    } else {
        out += "num = " + std::to_string(m.act_fixed);
    }
    return out + "]";
}

}  // namespace

std::string serialize_hcf(const ConfigFile& cfg) {
    std::ostringstream os;
    if (cfg.explore) {
        const ExploreOptions& e = *cfg.explore;
        os << "@explore_option{\n";
        os << "    loggers = " << loggers_text(e.loggers) << ";\n";
        os << "    strategy = " << strategy_text(e.strategy) << ";\n";
        os << "    filters = [";
        bool first = true;
        auto add = [&](const char* name, long v) {
            if (!first) os << ", ";
            os << name << " = " << v;
            first = false;
        };
        if (e.filters.max_depth) add("max_depth", *e.filters.max_depth);
        if (e.filters.max_loop_insts) add("max_loop_depth", *e.filters.max_loop_insts);
        if (e.filters.max_node_number) add("max_node_number", static_cast<long>(*e.filters.max_node_number));
        os << "];\n";
        os << "    priorities = " << priorities_text(e.priorities) << "\n";
        os << "}\n";
    }
    if (cfg.analyze) {
        const AnalyzeOptions& a = *cfg.analyze;
        os << "@analyze_option{\n";
        os << "    loggers = " << loggers_text(a.loggers) << ";\n";
        os << "    analysis_kind = ";
        switch (a.kind) {
            case AnalysisKind::Accept:
                os << "accept";
                break;
            case AnalysisKind::Prefix:
                os << "prefix";
                break;
            case AnalysisKind::Simulate:
                os << "simulate" << simulate_options_text(a.measure);
                break;
        }
        os << ";\n";
        os << "    strategy = " << strategy_text(a.strategy) << ";\n";
        os << "    priorities = " << priorities_text(a.priorities) << ";\n";
        os << "    goal = " << to_string(a.goal) << "\n";
        os << "}\n";
    }
    return os.str();
}

}  // namespace orv
