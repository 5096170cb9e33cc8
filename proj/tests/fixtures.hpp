#pragma once

#include "support.hpp"

namespace gridcomm::testing {

// Small utility-style network: a three-station microwave backbone between two
// control centres, with typed branches and one parallel plc/fiber pair.
inline Network backbone_fixture() {
    using NT = NodeType;
    using ET = EdgeType;
    return make_network(
        {
            {"cc1", NT::control_center}, {"cc2", NT::control_center}, {"mw1", NT::microwave},
            {"mw2", NT::microwave},      {"mw3", NT::microwave},      {"t1", NT::transmission},
            {"t2", NT::transmission},    {"t3", NT::transmission},    {"t4", NT::transmission},
            {"g1", NT::generating},      {"o1", NT::office},          {"r1", NT::repeater},
        },
        {
            {"e01", "cc1", "mw1", ET::microwave}, {"e02", "mw1", "mw2", ET::microwave},
            {"e03", "mw2", "mw3", ET::microwave}, {"e04", "mw3", "cc2", ET::microwave},
            {"e05", "mw1", "t1", ET::plc},        {"e06", "mw1", "t1", ET::fiber},
            {"e07", "t1", "t2", ET::plc},         {"e08", "mw2", "t3", ET::fiber},
            {"e09", "t3", "g1", ET::fiber},       {"e10", "mw3", "o1", ET::leased},
            {"e11", "o1", "t4", ET::leased},      {"e12", "t4", "cc2", ET::fiber},
            {"e13", "mw2", "r1", ET::radio},      {"e14", "t2", "t3", ET::plc},
        });
}

}  // namespace gridcomm::testing
