int both_positive(int a, int b) {
    if (a > 0) {
        if (b > 0) {
            return 1;
        }
    }
    return 0;
}
