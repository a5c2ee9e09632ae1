// Tests a handful of points against a three-criterion problem, then lists
// the whole efficient set.

#include <iostream>

#include "pmolp/enumerate.hpp"
#include "pmolp/io.hpp"

int main() {
    using namespace pmolp;

    auto c = CriteriaMatrix::from_rows({{1, 2, -4}, {2, -5, 1}, {0, 3, -0.5}});
    EfficiencyTester tester(c);

    for (auto x : {SimplexPoint({0.55, 0.45, 0.0}), SimplexPoint({0.3, 0.0, 0.7}),
                   SimplexPoint({0.0, 0.85, 0.15}), vertex(2, 3)}) {
        std::cout << io::report_text(tester.decide(x)) << '\n';
    }

    // Every T1 solved above is reused here.
    std::cout << io::structure_text(enumerate_faces(tester));
    std::cout << "linear programs solved: " << tester.solves() << '\n';
}
