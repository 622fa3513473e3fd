#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "harkit/types.hpp"

namespace harkit {

/// First annotated sit-to-stand transfer, the synchronization anchor.
inline const AnnotationInterval& first_sit_to_stand(const AnnotationTrack& track) {
    for (const auto& iv : track.intervals)
        if (iv.label == FineActivity::SitToStand) return iv;
    throw DataError("annotations contain no sit_to_stand interval to synchronize on");
}

/// Re-base both sensor streams so that the supplied event times (each on its
/// own stream's current timeline) coincide with the first annotated
/// sit-to-stand start. Annotations are left untouched.
inline RecordingSession synchronize(const RecordingSession& session, double thigh_event_s,
                                    double back_event_s) {
    session.annotations.validate();
    const double anchor = first_sit_to_stand(session.annotations).start_s;

    auto check_inside = [](const TriaxialSeries& s, double event_s, const char* which) {
        if (event_s < s.start_time || event_s > s.end_time())
            throw DataError(std::string(which) + " event time lies outside the stream span");
    };
    check_inside(session.thigh, thigh_event_s, "thigh");
    check_inside(session.back, back_event_s, "back");

    RecordingSession out = session;
    out.thigh.start_time += anchor - thigh_event_s;
    out.back.start_time += anchor - back_event_s;
    return out;
}

namespace detail {

/// Cut `count` samples starting at absolute time t0 from a stream; returns
/// false when the stream does not fully cover the span.
inline bool cut_slice(const TriaxialSeries& series, double t0, std::size_t count,
                      WindowSlice& out) {
    const double offset = (t0 - series.start_time) * series.rate_hz;
    const long first = std::lround(std::ceil(offset - 1e-6));
    if (first < 0) return false;
    const std::size_t begin = static_cast<std::size_t>(first);
    if (begin + count > series.size()) return false;
    for (int a = 0; a < 3; ++a)
        out.axes[a].assign(series.axes[a].begin() + static_cast<std::ptrdiff_t>(begin),
                           series.axes[a].begin() + static_cast<std::ptrdiff_t>(begin + count));
    return true;
}

}  // namespace detail

/// Tile the session into non-overlapping windows on the grid anchored at the
/// session clock origin (t = 0). A window is emitted only when a single
/// annotation interval covers its full span and both sensor streams cover it.
inline std::vector<LabeledWindow> segment(const RecordingSession& session,
                                          double window_s = kWindowSeconds) {
    if (window_s <= 0.0) throw ConfigError("segment: window length must be positive");
    session.annotations.validate();
    std::vector<LabeledWindow> windows;
    if (session.annotations.intervals.empty()) return windows;

    const std::size_t thigh_count =
        static_cast<std::size_t>(std::lround(window_s * session.thigh.rate_hz));
    const std::size_t back_count =
        static_cast<std::size_t>(std::lround(window_s * session.back.rate_hz));

    const double span_begin = session.annotations.intervals.front().start_s;
    const double span_end = session.annotations.intervals.back().end_s;
    const long k_begin = static_cast<long>(std::floor(span_begin / window_s));
    const long k_end = static_cast<long>(std::ceil(span_end / window_s));

    std::size_t iv = 0;
    const auto& intervals = session.annotations.intervals;
    for (long k = k_begin; k < k_end; ++k) {
        const double w0 = static_cast<double>(k) * window_s;
        const double w1 = w0 + window_s;
        while (iv < intervals.size() && intervals[iv].end_s < w1 - 1e-9) ++iv;
        if (iv >= intervals.size()) break;
        // Full coverage by one interval; anything else is a mixed window.
        if (intervals[iv].start_s > w0 + 1e-9) continue;

        LabeledWindow w;
        w.participant_id = session.participant_id;
        w.label = intervals[iv].label;
        w.origin = WindowOrigin::Real;
        if (!detail::cut_slice(session.thigh, w0, thigh_count, w.thigh)) continue;
        if (!detail::cut_slice(session.back, w0, back_count, w.back)) continue;
        windows.push_back(std::move(w));
    }
    return windows;
}

}  // namespace harkit
