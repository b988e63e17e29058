// Regenerates golden/fixture_report.html. Not run by ctest.
#include <iostream>

#include "report_fixture.hpp"

int main() {
    simpeval::write_file_atomic(simpeval::fs::path(SIMPEVAL_GOLDEN_DIR) / "fixture_report.html",
                                fixture_report_html(7));
    std::cout << "wrote " << SIMPEVAL_GOLDEN_DIR << "/fixture_report.html\n";
}
