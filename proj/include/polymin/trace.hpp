#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polymin/polygonal.hpp"

namespace polymin {

enum class EventKind {
  Evaluation,
  Proposal,
  Adjustment,
  TripletFound,
  RiseConfirmed,
  CandidateAccepted,
  CandidateRejected,
  Improvement,
  PassBegin,
  PassEnd,
};

const char* to_string(EventKind k);
std::optional<EventKind> event_kind_from_string(const std::string& s);

struct TraceEvent {
  int seq = 0;
  int nff = 0; // evaluation-count stamp at the time of the event
  EventKind kind = EventKind::Evaluation;
  std::optional<double> x;
  std::optional<double> y;
  nlohmann::json detail; // kind-specific payload (may be null)
};

struct PolySnapshot {
  int pass = 0;
  std::vector<EvalPoint> points;
};

/// Ordered event log of a run plus per-pass polygonal snapshots.
/// Serialized as line-delimited JSON, schema "polymin-trace/1".
class Trace {
public:
  static constexpr const char* kSchema = "polymin-trace/1";

  void record(int nff, EventKind kind, std::optional<double> x = {},
              std::optional<double> y = {}, nlohmann::json detail = nullptr);
  void snapshot(int pass, const Polygonal& poly);

  const std::vector<TraceEvent>& events() const { return events_; }
  const std::vector<PolySnapshot>& snapshots() const { return snapshots_; }

  void to_jsonl(std::ostream& os) const;
  static Trace from_jsonl(std::istream& is);

private:
  std::vector<TraceEvent> events_;
  std::vector<PolySnapshot> snapshots_;
  int next_seq_ = 0;
};

} // namespace polymin
