#include <cstdlib>
#include <iostream>

#include "idcodes/acceptance.hpp"

int main() {
    try {
        return idcodes::run_acceptance(std::cout) == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
}
