#pragma once

#include <string>

#include "json.hpp"

#include "hbarlab/curves.hpp"
#include "hbarlab/disks.hpp"
#include "hbarlab/dynamics.hpp"
#include "hbarlab/lattice.hpp"
#include "hbarlab/reduction.hpp"

namespace hbarlab {

/// Insertion-ordered JSON keeps artifacts byte-stable across runs.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hbar-lab/1";

Json to_json(const PiValue& v);
Json to_json(const CurveSpec& c);
Json to_json(const ReducedFormReport& r);
Json to_json(const DiskReport& r);
Json to_json(const InvariantReport& r);
Json to_json(const DisjointnessCertificate& c);
Json to_json(const SwapCertificate& c);
Json to_json(const TranslationCertificate& c);

/// One CLI invocation's result envelope. Wall time is deliberately not part
/// of the serialized artifact: artifacts must be byte-identical across runs.
struct RunReport {
    std::string command;
    Json parameters;
    Json results;
    int checks_passed = 0;
    int checks_failed = 0;
    double wall_time_s = 0.0;

    Json to_json() const;
    void check(bool ok, const std::string& what);
};

/// "%.12g" rendering used by the CSV emitters.
std::string format_csv_number(double v);

}  // namespace hbarlab
