#include <cstdio>
int main() { std::puts("supersite (wiring pending)"); return 0; }
