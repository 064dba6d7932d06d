#ifndef WHITNEY_IO_HPP
#define WHITNEY_IO_HPP

#include <memory>
#include <string>

#include "json.hpp"
#include "whitney/labeling.hpp"
#include "whitney/poset.hpp"
#include "whitney/qsym.hpp"
#include "whitney/verify.hpp"

namespace whitney {

// {"n", "covers": [[lo,hi],...], "names"?: {"id": name}, "labels"?: {"lo-hi": [ints]}, "order"?: {"mode": ...}}
struct PosetDocument {
    Poset poset;
    std::shared_ptr<EdgeLabeling> labeling;  // null when the document has no labels
};

PosetDocument poset_from_json(const nlohmann::json& j);
PosetDocument read_poset_file(const std::string& path);

nlohmann::json order_to_json(const LabelOrder& order);
LabelOrder order_from_json(const nlohmann::json& j);

nlohmann::json poset_to_json(const Poset& P, const EdgeLabeling* lab = nullptr);
// One node per element grouped by rank, one edge per cover, labels on edges when given.
std::string poset_to_dot(const Poset& P, const EdgeLabeling* lab = nullptr, const std::string& graph_name = "P");

nlohmann::json qsym_to_json(const QSymFundamental& q);
QSymFundamental qsym_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r, const Poset& P);

} // namespace whitney

#endif
