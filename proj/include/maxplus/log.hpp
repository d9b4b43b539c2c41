#pragma once

#include <functional>

#include <json.hpp>

namespace maxplus {

/// Structured event record; sinks receive one object per event and
/// typically serialize it as a single line.
using Event = nlohmann::json;
using EventSink = std::function<void(const Event&)>;

inline void emit(const EventSink& sink, Event event) {
  if (sink) sink(event);
}

}  // namespace maxplus
