#pragma once

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lateops {

enum class DecisionModel { Standard, LateAccept, LateReject, LateAcceptThenReject };

inline const char* to_string(DecisionModel m) {
    switch (m) {
        case DecisionModel::Standard: return "standard";
        case DecisionModel::LateAccept: return "la";
        case DecisionModel::LateReject: return "lr";
        case DecisionModel::LateAcceptThenReject: return "lar";
    }
    return "?";
}

inline DecisionModel parse_decision_model(const std::string& s) {
    if (s == "standard") return DecisionModel::Standard;
    if (s == "la") return DecisionModel::LateAccept;
    if (s == "lr") return DecisionModel::LateReject;
    if (s == "lar") return DecisionModel::LateAcceptThenReject;
    throw std::invalid_argument("unknown decision model '" + s + "'");
}

enum class ItemKind { VertexItem, EdgeItem };

enum class MoveAction { Reveal, AcceptNow, RejectNow, LateAccept, LateReject, Finalize };

inline const char* to_string(MoveAction a) {
    switch (a) {
        case MoveAction::Reveal: return "reveal";
        case MoveAction::AcceptNow: return "acceptNow";
        case MoveAction::RejectNow: return "rejectNow";
        case MoveAction::LateAccept: return "lateAccept";
        case MoveAction::LateReject: return "lateReject";
        case MoveAction::Finalize: return "finalize";
    }
    return "?";
}

struct Move {
    std::size_t step = 0;
    MoveAction action = MoveAction::Reveal;
    int item = -1;
};

struct IllegalMove : std::runtime_error {
    IllegalMove(const std::string& rule_, Move move_)
        : std::runtime_error(rule_), rule(rule_), move(move_) {}
    std::string rule;
    Move move;
};

// Tracks the accepted / rejected / pending partition of items under one of
// the four irrevocability models. Items are dense indices (vertices in
// arrival order, or edges in arrival order).
//
// Legality matrix, enforced in apply():
//   Standard    accept/reject the current item only; decided by end of step
//   LateAccept  accept the current item or any pending one; no rejection
//               moves, pending items fall to rejected at finalize only
//   LateReject  decide the current item on arrival; accepted items may be
//               rejected later; rejection is final
//   LAR         accept now or late; accepted items may be rejected later;
//               rejection is final; no immediate rejection moves
class SolutionLedger {
  public:
    SolutionLedger(DecisionModel model, ItemKind kind, bool implicit_reject = false)
        : model_(model), kind_(kind), implicit_reject_(implicit_reject) {}

    DecisionModel model() const { return model_; }
    ItemKind kind() const { return kind_; }

    const std::set<int>& accepted() const { return accepted_; }
    const std::set<int>& rejected() const { return rejected_; }
    const std::set<int>& pending() const { return pending_; }
    int revealed_count() const { return revealed_; }
    int current_item() const { return current_; }
    bool finalized() const { return finalized_; }
    const std::vector<Move>& log() const { return log_; }

    // Starts the step for the next item; ids must arrive densely.
    void reveal(int item) {
        if (finalized_) throw IllegalMove("move after finalization", {step(), MoveAction::Reveal, item});
        if (item != revealed_)
            throw IllegalMove("reveal out of order", {step(), MoveAction::Reveal, item});
        require_prev_step_closed();
        ++revealed_;
        current_ = item;
        pending_.insert(item);
        log_.push_back({step(), MoveAction::Reveal, item});
    }

    void apply(MoveAction action, int item) {
        switch (action) {
            case MoveAction::AcceptNow: accept_now(item); return;
            case MoveAction::RejectNow: reject_now(item); return;
            case MoveAction::LateAccept: late_accept(item); return;
            case MoveAction::LateReject: late_reject(item); return;
            case MoveAction::Reveal: reveal(item); return;
            case MoveAction::Finalize:
                throw IllegalMove("finalize is not a per-item move", {step(), action, item});
        }
    }

    void accept_now(int item) {
        const Move mv{step(), MoveAction::AcceptNow, item};
        require_open(mv);
        if (item != current_) throw IllegalMove("accept-now targets a non-current item", mv);
        if (!pending_.count(item)) throw IllegalMove("current item already decided", mv);
        pending_.erase(item);
        accepted_.insert(item);
        log_.push_back(mv);
    }

    void reject_now(int item) {
        const Move mv{step(), MoveAction::RejectNow, item};
        require_open(mv);
        if (model_ == DecisionModel::LateAccept)
            throw IllegalMove("immediate reject in late-accept model", mv);
        if (model_ == DecisionModel::LateAcceptThenReject)
            throw IllegalMove("immediate reject in late-accept-reject model", mv);
        if (item != current_) throw IllegalMove("reject-now targets a non-current item", mv);
        if (!pending_.count(item)) throw IllegalMove("current item already decided", mv);
        pending_.erase(item);
        rejected_.insert(item);
        log_.push_back(mv);
    }

    void late_accept(int item) {
        const Move mv{step(), MoveAction::LateAccept, item};
        require_open(mv);
        if (model_ == DecisionModel::Standard)
            throw IllegalMove("late accept in standard model", mv);
        if (model_ == DecisionModel::LateReject)
            throw IllegalMove("late accept in late-reject model", mv);
        if (rejected_.count(item)) throw IllegalMove("re-accept after late reject", mv);
        if (accepted_.count(item)) throw IllegalMove("item already accepted", mv);
        if (!pending_.count(item)) throw IllegalMove("late accept of unrevealed item", mv);
        pending_.erase(item);
        accepted_.insert(item);
        log_.push_back(mv);
    }

    void late_reject(int item) {
        const Move mv{step(), MoveAction::LateReject, item};
        require_open(mv);
        if (model_ == DecisionModel::Standard)
            throw IllegalMove("late reject in standard model", mv);
        if (model_ == DecisionModel::LateAccept)
            throw IllegalMove("late reject in late-accept model", mv);
        if (rejected_.count(item)) throw IllegalMove("item already rejected", mv);
        if (!accepted_.count(item)) throw IllegalMove("late reject of unaccepted item", mv);
        accepted_.erase(item);
        rejected_.insert(item);
        log_.push_back(mv);
    }

    // Standard / late-reject models must not leave the current item pending.
    void end_step() {
        if (current_ < 0) return;
        const bool must_decide = model_ == DecisionModel::Standard ||
                                 model_ == DecisionModel::LateReject;
        if (must_decide && pending_.count(current_)) {
            if (!implicit_reject_)
                throw IllegalMove(model_ == DecisionModel::Standard
                                      ? "undecided item in standard model"
                                      : "undecided item in late-reject model",
                                  {step(), MoveAction::RejectNow, current_});
            reject_now(current_);
        }
        current_ = -1;
    }

    // Drains pending into rejected (never-accepted is a rejection at the
    // end of input) and returns the accepted set, sorted.
    std::vector<int> finalize() {
        if (finalized_) throw IllegalMove("finalize twice", {step(), MoveAction::Finalize, -1});
        end_step();
        for (int item : pending_) log_.push_back({step(), MoveAction::Finalize, item});
        rejected_.insert(pending_.begin(), pending_.end());
        pending_.clear();
        finalized_ = true;
        return std::vector<int>(accepted_.begin(), accepted_.end());
    }

    // One JSON object per line; replayable together with the reveals.
    std::string log_json_lines() const {
        std::ostringstream out;
        for (const Move& mv : log_) {
            out << "{\"step\":" << mv.step << ",\"action\":\"" << to_string(mv.action)
                << "\",\"item\":\"" << item_name(mv.item) << "\"}\n";
        }
        return out.str();
    }

    std::string item_name(int item) const {
        if (item < 0) return "-";
        return (kind_ == ItemKind::VertexItem ? "v" : "e") + std::to_string(item);
    }

    // Rebuilds a ledger from a recorded log; used to check replayability.
    static SolutionLedger replay(DecisionModel model, ItemKind kind, const std::vector<Move>& log) {
        SolutionLedger led(model, kind);
        for (const Move& mv : log) {
            if (mv.action == MoveAction::Finalize) {
                if (!led.finalized_) led.finalize();
                continue;
            }
            if (mv.action == MoveAction::Reveal && led.current_ >= 0) led.end_step();
            led.apply(mv.action, mv.item);
        }
        if (!led.finalized_) led.end_step();
        return led;
    }

  private:
    std::size_t step() const { return revealed_ == 0 ? 0 : static_cast<std::size_t>(revealed_ - 1); }

    void require_open(const Move& mv) const {
        if (finalized_) throw IllegalMove("move after finalization", mv);
        if (revealed_ == 0) throw IllegalMove("move before any reveal", mv);
        if (mv.item < 0 || mv.item >= revealed_)
            throw IllegalMove("move on unrevealed item", mv);
    }

    void require_prev_step_closed() {
        // reveal() implies the previous step ended; enforce its obligations.
        if (current_ >= 0) end_step();
    }

    DecisionModel model_;
    ItemKind kind_;
    bool implicit_reject_;
    std::set<int> accepted_;
    std::set<int> rejected_;
    std::set<int> pending_;
    std::vector<Move> log_;
    int revealed_ = 0;
    int current_ = -1;
    bool finalized_ = false;
};

}  // namespace lateops
