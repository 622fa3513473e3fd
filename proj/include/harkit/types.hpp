#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace harkit {

// --- error taxonomy, mapped to CLI exit codes ---------------------------

/// Bad configuration or parameter value (exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (exit code 3).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Failure while executing a pipeline stage (exit code 4).
struct PipelineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- sensors and labels --------------------------------------------------

enum class SensorId { UpperThigh, LowerBack };

inline const char* sensor_name(SensorId s) {
    return s == SensorId::UpperThigh ? "thigh" : "back";
}

/// Fine-grained activity labels as annotated.
enum class FineActivity : std::uint8_t {
    Walking,
    Standing,
    Sitting,
    Supine,
    LeftLateral,
    RightLateral,
    SitToStand,
    StandToSit,
    SitToLie,
    LieToSit,
};

inline constexpr int kFineActivityCount = 10;

/// Coarse classes the models are trained on.
enum class CoarseActivity : std::uint8_t { Walk, Stand, Sit, LieDown, Transfer };

inline constexpr int kCoarseActivityCount = 5;

inline constexpr std::array<FineActivity, kFineActivityCount> kAllFineActivities = {
    FineActivity::Walking,    FineActivity::Standing,   FineActivity::Sitting,
    FineActivity::Supine,     FineActivity::LeftLateral, FineActivity::RightLateral,
    FineActivity::SitToStand, FineActivity::StandToSit, FineActivity::SitToLie,
    FineActivity::LieToSit,
};

inline constexpr std::array<CoarseActivity, kCoarseActivityCount> kAllCoarseActivities = {
    CoarseActivity::Walk, CoarseActivity::Stand, CoarseActivity::Sit,
    CoarseActivity::LieDown, CoarseActivity::Transfer,
};

/// Total mapping of fine labels onto the five coarse classes: the three lying
/// postures merge into LieDown, the four postural transitions into Transfer.
inline CoarseActivity coarse_of(FineActivity fine) {
    switch (fine) {
        case FineActivity::Walking:      return CoarseActivity::Walk;
        case FineActivity::Standing:     return CoarseActivity::Stand;
        case FineActivity::Sitting:      return CoarseActivity::Sit;
        case FineActivity::Supine:
        case FineActivity::LeftLateral:
        case FineActivity::RightLateral: return CoarseActivity::LieDown;
        case FineActivity::SitToStand:
        case FineActivity::StandToSit:
        case FineActivity::SitToLie:
        case FineActivity::LieToSit:     return CoarseActivity::Transfer;
    }
    throw ConfigError("coarse_of: invalid fine activity");
}

inline const char* fine_name(FineActivity fine) {
    switch (fine) {
        case FineActivity::Walking:      return "walking";
        case FineActivity::Standing:     return "standing";
        case FineActivity::Sitting:      return "sitting";
        case FineActivity::Supine:       return "supine";
        case FineActivity::LeftLateral:  return "left_lateral";
        case FineActivity::RightLateral: return "right_lateral";
        case FineActivity::SitToStand:   return "sit_to_stand";
        case FineActivity::StandToSit:   return "stand_to_sit";
        case FineActivity::SitToLie:     return "sit_to_lie";
        case FineActivity::LieToSit:     return "lie_to_sit";
    }
    throw ConfigError("fine_name: invalid fine activity");
}

inline const char* coarse_name(CoarseActivity c) {
    switch (c) {
        case CoarseActivity::Walk:     return "walk";
        case CoarseActivity::Stand:    return "stand";
        case CoarseActivity::Sit:      return "sit";
        case CoarseActivity::LieDown:  return "lie_down";
        case CoarseActivity::Transfer: return "transfer";
    }
    throw ConfigError("coarse_name: invalid coarse activity");
}

inline FineActivity parse_fine(const std::string& name) {
    for (FineActivity f : kAllFineActivities)
        if (name == fine_name(f)) return f;
    throw DataError("unknown activity label '" + name + "'");
}

// --- raw signal containers -----------------------------------------------

/// One sensor's triaxial acceleration stream. Axes are stored separately so
/// filters can run per axis; sample i lives at start_time + i / rate_hz.
struct TriaxialSeries {
    SensorId sensor_id = SensorId::UpperThigh;
    double rate_hz = 0.0;
    double start_time = 0.0;
    std::array<std::vector<double>, 3> axes;  // x, y, z in g

    std::size_t size() const { return axes[0].size(); }
    double duration() const {
        return size() == 0 ? 0.0 : static_cast<double>(size() - 1) / rate_hz;
    }
    double end_time() const { return start_time + duration(); }

    void validate() const {
        if (rate_hz <= 0.0) throw DataError("series rate must be positive");
        if (axes[0].empty()) throw DataError("empty series");
        if (axes[1].size() != axes[0].size() || axes[2].size() != axes[0].size())
            throw DataError("series axes have unequal lengths");
        for (const auto& axis : axes)
            for (double v : axis)
                if (!std::isfinite(v)) throw DataError("series contains non-finite sample");
    }
};

/// Gold-standard label track: sorted, non-overlapping [start, end) intervals.
struct AnnotationInterval {
    double start_s = 0.0;
    double end_s = 0.0;
    FineActivity label = FineActivity::Sitting;
};

struct AnnotationTrack {
    std::vector<AnnotationInterval> intervals;

    void validate() const {
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            if (!(intervals[i].start_s < intervals[i].end_s))
                throw DataError("annotation interval with start >= end");
            if (i > 0 && intervals[i].start_s < intervals[i - 1].end_s)
                throw DataError("overlapping or unsorted annotation intervals");
        }
    }
};

struct RecordingSession {
    std::string participant_id;
    TriaxialSeries thigh;
    TriaxialSeries back;
    AnnotationTrack annotations;
};

// --- windows ---------------------------------------------------------------

enum class WindowOrigin { Real, Synthetic };

inline constexpr double kWindowSeconds = 2.0;
inline constexpr double kThighRateHz = 25.0;
inline constexpr double kBackRateHz = 128.0;
inline constexpr std::size_t kThighWindowSamples = 50;   // round(2 * 25)
inline constexpr std::size_t kBackWindowSamples = 256;   // round(2 * 128)

/// Triaxial slice of one sensor covering a window (or an arbitrary span for
/// synthesis source segments).
struct WindowSlice {
    std::array<std::vector<double>, 3> axes;

    std::size_t size() const { return axes[0].size(); }
};

/// A synchronized 2 s pair of sensor slices carrying one fine label.
struct LabeledWindow {
    std::string participant_id;
    FineActivity label = FineActivity::Sitting;
    WindowOrigin origin = WindowOrigin::Real;
    WindowSlice thigh;  // 50 samples x 3 axes
    WindowSlice back;   // 256 samples x 3 axes

    CoarseActivity coarse() const { return coarse_of(label); }

    void validate() const {
        if (thigh.size() != kThighWindowSamples)
            throw DataError("thigh slice must hold 50 samples");
        if (back.size() != kBackWindowSamples)
            throw DataError("back slice must hold 256 samples");
        for (const auto& axis : thigh.axes)
            if (axis.size() != kThighWindowSamples) throw DataError("ragged thigh slice");
        for (const auto& axis : back.axes)
            if (axis.size() != kBackWindowSamples) throw DataError("ragged back slice");
    }
};

}  // namespace harkit
