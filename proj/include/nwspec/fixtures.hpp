// Built-in example germs and their reference spectral pairs. The reference
// lists are the published SINGULAR outputs for these three germs.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nwspec::fixtures {

struct Fixture {
    const char* name;
    const char* germ;
    std::vector<std::string> vars;
    long mu;
    const char* spp; // reference spectral pairs, "((a/b,w),m)" list
};

inline const Fixture& get(const std::string& name) {
    static const Fixture f1{
        "f1", "x15+x6y4+x3y6+y12", {"x", "y"}, 94,
        "((-19/24,1),1),((-43/60,1),1),((-2/3,2),1),((-13/20,1),1),((-7/12,1),3),"
        "((-31/60,1),1),((-1/2,2),1),((-1/2,1),1),((-11/24,1),1),((-9/20,1),1),"
        "((-13/30,1),1),((-5/12,1),1),((-23/60,1),1),((-3/8,1),1),((-11/30,1),1),"
        "((-1/3,2),1),((-1/3,1),1),((-19/60,1),1),((-3/10,1),1),((-7/24,1),1),"
        "((-1/4,1),4),((-7/30,1),1),((-13/60,1),1),((-11/60,1),1),((-1/6,1),4),"
        "((-3/20,1),1),((-1/8,1),1),((-7/60,1),1),((-1/10,1),1),((-1/12,1),4),"
        "((-1/20,1),1),((-1/24,1),1),((-1/30,1),1),((-1/60,1),1),((0,1),4),"
        "((1/60,1),1),((1/30,1),1),((1/24,1),1),((1/20,1),1),((1/12,1),4),"
        "((1/10,1),1),((7/60,1),1),((1/8,1),1),((3/20,1),1),((1/6,1),4),"
        "((11/60,1),1),((13/60,1),1),((7/30,1),1),((1/4,1),4),((7/24,1),1),"
        "((3/10,1),1),((19/60,1),1),((1/3,1),1),((1/3,0),1),((11/30,1),1),"
        "((3/8,1),1),((23/60,1),1),((5/12,1),1),((13/30,1),1),((9/20,1),1),"
        "((11/24,1),1),((1/2,1),1),((1/2,0),1),((31/60,1),1),((7/12,1),3),"
        "((13/20,1),1),((2/3,0),1),((43/60,1),1),((19/24,1),1)"};
    static const Fixture f2{
        "f2", "x4+y4+z8+x2z2+y2z2", {"x", "y", "z"}, 31,
        "((-1/4,2),1),((0,3),1),((0,2),2),((1/8,2),1),((1/4,2),6),((3/8,2),1),"
        "((1/2,2),7),((5/8,2),1),((3/4,2),6),((7/8,2),1),((1,2),2),((1,1),1),"
        "((5/4,2),1)"};
    static const Fixture f3{
        "f3", "x8+y8+z8+x2y2z2", {"x", "y", "z"}, 215,
        "((-1/2,4),1),((-3/8,3),3),((-1/4,3),3),((-1/4,2),3),((-1/8,3),3),"
        "((-1/8,2),6),((0,3),4),((0,2),9),((1/8,3),3),((1/8,2),15),((1/4,3),3),"
        "((1/4,2),18),((3/8,3),3),((3/8,2),21),((1/2,2),25),((5/8,2),21),"
        "((5/8,1),3),((3/4,2),18),((3/4,1),3),((7/8,2),15),((7/8,1),3),((1,2),9),"
        "((1,1),4),((9/8,2),6),((9/8,1),3),((5/4,2),3),((5/4,1),3),((11/8,1),3),"
        "((3/2,0),1)"};
    if (name == "f1") return f1;
    if (name == "f2") return f2;
    if (name == "f3") return f3;
    throw std::invalid_argument("unknown fixture: " + name);
}

} // namespace nwspec::fixtures
