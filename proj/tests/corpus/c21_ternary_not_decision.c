int pick(int a, int b, int use_first) {
    int chosen = use_first ? a : b;
    return chosen;
}
