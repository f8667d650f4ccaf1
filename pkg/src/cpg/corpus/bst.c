/* Unbalanced binary search tree. */

struct Tree {
    int key;
    int count;
    struct Tree *left;
    struct Tree *right;
};

struct Tree *tree_new(int key) {
    struct Tree *t = malloc(32);
    t->key = key;
    t->count = 1;
    t->left = NULL;
    t->right = NULL;
    return t;
}

struct Tree *tree_insert(struct Tree *root, int key) {
    if (root == NULL) {
        return tree_new(key);
    }
    if (key < root->key) {
        root->left = tree_insert(root->left, key);
    } else if (key > root->key) {
        root->right = tree_insert(root->right, key);
    } else {
        root->count = root->count + 1;
    }
    return root;
}

int tree_contains(struct Tree *root, int key) {
    struct Tree *cur = root;
    while (cur != NULL) {
        if (key == cur->key) {
            return 1;
        }
        cur = key < cur->key ? cur->left : cur->right;
    }
    return 0;
}

int tree_size(struct Tree *root) {
    if (root == NULL) {
        return 0;
    }
    return root->count + tree_size(root->left) + tree_size(root->right);
}

int tree_height(struct Tree *root) {
    int lh;
    int rh;
    if (root == NULL) {
        return 0;
    }
    lh = tree_height(root->left);
    rh = tree_height(root->right);
    return 1 + (lh > rh ? lh : rh);
}

int tree_min(struct Tree *root) {
    struct Tree *cur = root;
    if (cur == NULL) {
        return -1;
    }
    while (cur->left != NULL) {
        cur = cur->left;
    }
    return cur->key;
}

int tree_max(struct Tree *root) {
    struct Tree *cur = root;
    if (cur == NULL) {
        return -1;
    }
    while (cur->right != NULL) {
        cur = cur->right;
    }
    return cur->key;
}

int tree_sum_range(struct Tree *root, int lo, int hi) {
    int sum = 0;
    if (root == NULL) {
        return 0;
    }
    if (root->key >= lo && root->key <= hi) {
        sum = root->key * root->count;
    }
    if (root->key > lo) {
        sum = sum + tree_sum_range(root->left, lo, hi);
    }
    if (root->key < hi) {
        sum = sum + tree_sum_range(root->right, lo, hi);
    }
    return sum;
}

void tree_free(struct Tree *root) {
    if (root == NULL) {
        return;
    }
    tree_free(root->left);
    tree_free(root->right);
    free(root);
}

int tree_is_valid(struct Tree *root, int lo, int hi) {
    if (root == NULL) {
        return 1;
    }
    if (root->key < lo || root->key > hi) {
        return 0;
    }
    return tree_is_valid(root->left, lo, root->key - 1) && tree_is_valid(root->right, root->key + 1, hi);
}
