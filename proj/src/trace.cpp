#include "polymin/trace.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace polymin {

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::Evaluation: return "evaluation";
    case EventKind::Proposal: return "proposal";
    case EventKind::Adjustment: return "adjustment";
    case EventKind::TripletFound: return "triplet_found";
    case EventKind::RiseConfirmed: return "rise_confirmed";
    case EventKind::CandidateAccepted: return "candidate_accepted";
    case EventKind::CandidateRejected: return "candidate_rejected";
    case EventKind::Improvement: return "improvement";
    case EventKind::PassBegin: return "pass_begin";
    case EventKind::PassEnd: return "pass_end";
  }
  return "unknown";
}

std::optional<EventKind> event_kind_from_string(const std::string& s) {
  static const std::pair<const char*, EventKind> table[] = {
      {"evaluation", EventKind::Evaluation},
      {"proposal", EventKind::Proposal},
      {"adjustment", EventKind::Adjustment},
      {"triplet_found", EventKind::TripletFound},
      {"rise_confirmed", EventKind::RiseConfirmed},
      {"candidate_accepted", EventKind::CandidateAccepted},
      {"candidate_rejected", EventKind::CandidateRejected},
      {"improvement", EventKind::Improvement},
      {"pass_begin", EventKind::PassBegin},
      {"pass_end", EventKind::PassEnd},
  };
  for (const auto& [name, kind] : table) {
    if (s == name) return kind;
  }
  return std::nullopt;
}

void Trace::record(int nff, EventKind kind, std::optional<double> x,
                   std::optional<double> y, nlohmann::json detail) {
  TraceEvent e;
  e.seq = next_seq_++;
  e.nff = nff;
  e.kind = kind;
  e.x = x;
  e.y = y;
  e.detail = std::move(detail);
  events_.push_back(std::move(e));
}

void Trace::snapshot(int pass, const Polygonal& poly) {
  PolySnapshot s;
  s.pass = pass;
  s.points = poly.points();
  snapshots_.push_back(std::move(s));
}

void Trace::to_jsonl(std::ostream& os) const {
  os << nlohmann::json{{"schema", kSchema}} << '\n';
  for (const auto& e : events_) {
    nlohmann::json j{{"record", "event"},
                     {"seq", e.seq},
                     {"nff", e.nff},
                     {"kind", to_string(e.kind)}};
    if (e.x) j["x"] = *e.x;
    if (e.y) j["y"] = *e.y;
    if (!e.detail.is_null()) j["detail"] = e.detail;
    os << j << '\n';
  }
  for (const auto& s : snapshots_) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.points) {
      pts.push_back({p.x, p.y, p.refined});
    }
    os << nlohmann::json{{"record", "snapshot"}, {"pass", s.pass}, {"points", pts}}
       << '\n';
  }
}

Trace Trace::from_jsonl(std::istream& is) {
  Trace t;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    if (!have_header) {
      if (j.value("schema", "") != kSchema) {
        throw std::runtime_error("unrecognized trace schema");
      }
      have_header = true;
      continue;
    }
    const std::string record = j.value("record", "");
    if (record == "event") {
      TraceEvent e;
      e.seq = j.at("seq").get<int>();
      e.nff = j.at("nff").get<int>();
      auto kind = event_kind_from_string(j.at("kind").get<std::string>());
      if (!kind) throw std::runtime_error("unknown event kind in trace");
      e.kind = *kind;
      if (j.contains("x")) e.x = j["x"].get<double>();
      if (j.contains("y")) e.y = j["y"].get<double>();
      if (j.contains("detail")) e.detail = j["detail"];
      t.events_.push_back(std::move(e));
      t.next_seq_ = t.events_.back().seq + 1;
    } else if (record == "snapshot") {
      PolySnapshot s;
      s.pass = j.at("pass").get<int>();
      for (const auto& row : j.at("points")) {
        s.points.push_back({row[0].get<double>(), row[1].get<double>(),
                            row[2].get<bool>()});
      }
      t.snapshots_.push_back(std::move(s));
    } else {
      throw std::runtime_error("unknown record type in trace");
    }
  }
  if (!have_header) throw std::runtime_error("empty trace file");
  return t;
}

} // namespace polymin
