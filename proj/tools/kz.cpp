// placeholder; the real CLI lands with the runner
int main() { return 0; }
