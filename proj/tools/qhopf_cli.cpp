#include "qhopf/hopf.hpp"

#include <iostream>

int main() {
    std::cout << "qhopf: placeholder\n";
    return 0;
}
