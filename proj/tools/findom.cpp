#include "findom/kupisch.hpp"

#include <cstdio>

int main() {
    std::puts("findom: CLI under construction");
    return 0;
}
